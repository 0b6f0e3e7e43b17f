#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include <quat/io.hpp>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <unistd.h>

using namespace quat;
namespace fs = std::filesystem;

namespace
{

struct Result
{
  int status;
  std::string out;
  std::string err;
};

Result run_cli( std::vector<std::string> args )
{
  std::ostringstream out, err;
  const int status = cli::run( args, out, err );
  return { status, out.str(), err.str() };
}

struct TempDir
{
  fs::path path;
  TempDir() : path( fs::temp_directory_path() / ( "quat_cli_" + std::to_string( ::getpid() ) ) )
  {
    fs::create_directories( path );
  }
  ~TempDir() { fs::remove_all( path ); }
  std::string operator/( std::string const& name ) const { return ( path / name ).string(); }
};

QFunction min_function()
{
  std::vector<int> v( 16 );
  for ( int a = 0; a < 4; ++a )
    for ( int b = 0; b < 4; ++b )
      v[4 * a + b] = std::min( a, b );
  return qf_from_values( 2, v );
}

} // namespace

TEST_CASE( "bounds subcommand" )
{
  auto r = run_cli( { "bounds", "--form", "2", "--vars", "2", "--v1", "2", "--v2", "2" } );
  CHECK( r.status == 0 );
  CHECK( r.out == "N=71 d=9\n" );
  r = run_cli( { "bounds", "--form", "1", "--vars", "2" } );
  CHECK( r.out == "N=55 d=7\n" );
  CHECK( run_cli( { "bounds", "--form", "3", "--vars", "2" } ).status == 2 );
  CHECK( run_cli( { "bounds", "--vars", "2", "--v1", "1" } ).status == 2 );
}

TEST_CASE( "usage errors" )
{
  CHECK( run_cli( {} ).status == 2 );
  CHECK( run_cli( { "frobnicate" } ).status == 2 );
  CHECK( run_cli( { "sim", "/nonexistent/file.qnet" } ).status == 2 );
  CHECK( run_cli( { "--help" } ).status == 0 );
}

TEST_CASE( "tables subcommand" )
{
  const auto r = run_cli( { "tables" } );
  CHECK( r.status == 0 );
  CHECK( r.out == render_operator_tables() );
}

TEST_CASE( "MIN round trip through synth, lower and verify" )
{
  TempDir dir;
  write_text_file( dir / "min.qtt", write_qtt( min_function() ) );
  auto r = run_cli( { "synth", dir / "min.qtt", "--form", "2", "-o", dir / "min.qsop" } );
  REQUIRE( r.status == 0 );
  CHECK( r.out.find( "products=4" ) != std::string::npos );
  r = run_cli( { "lower", dir / "min.qsop", "-o", dir / "min.qnet" } );
  REQUIRE( r.status == 0 );
  CHECK( r.out.find( "within=yes" ) != std::string::npos );
  CHECK( run_cli( { "verify", dir / "min.qnet", dir / "min.qtt" } ).status == 0 );
  CHECK( run_cli( { "verify", dir / "min.qsop", dir / "min.qtt" } ).status == 0 );

  /* a different table must be reported with its first counterexample */
  const auto reference = min_function();
  std::vector<Qudit> changed( reference.outputs().begin(), reference.outputs().end() );
  changed[6] = Qudit{ 3 };
  write_text_file( dir / "bad.qtt", write_qtt( QFunction( 2, changed ) ) );
  r = run_cli( { "verify", dir / "min.qnet", dir / "bad.qtt" } );
  CHECK( r.status == 1 );
  CHECK( r.out.find( "expected 3, got 1" ) != std::string::npos );
}

TEST_CASE( "synth is deterministic and supports random corpora" )
{
  TempDir dir;
  const auto a = run_cli( { "synth", "--random", "2", "--seed", "11", "--form", "1", "--peephole" } );
  const auto b = run_cli( { "synth", "--random", "2", "--seed", "11", "--form", "1", "--peephole" } );
  CHECK( a.status == 0 );
  CHECK( a.out == b.out );
  CHECK( read_qsop( a.out ) == peephole_inverters( synthesize_form1( qf_random( 2, 11 ) ) ) );
  CHECK( run_cli( { "synth", "--random", "2", "--form", "2", "--minmax" } ).status == 2 );
  CHECK( run_cli( { "synth" } ).status == 2 );
}

TEST_CASE( "circuit and sim subcommands" )
{
  TempDir dir;
  REQUIRE( run_cli( { "circuit", "decoder", "-n", "1", "-o", dir / "dec.qnet" } ).status == 0 );
  auto r = run_cli( { "sim", dir / "dec.qnet", "--set", "S=2" } );
  CHECK( r.status == 0 );
  CHECK( r.out == "L0=0 L1=0 L2=3 L3=0\n" );
  CHECK( run_cli( { "sim", dir / "dec.qnet" } ).status == 2 );
  CHECK( run_cli( { "sim", dir / "dec.qnet", "--set", "S=5" } ).status == 2 );
  CHECK( run_cli( { "sim", dir / "dec.qnet", "--set", "S=1", "--set", "T=1" } ).status == 2 );

  REQUIRE( run_cli( { "circuit", "demux", "-n", "1", "-o", dir / "demux.qnet" } ).status == 0 );
  r = run_cli( { "sim", dir / "demux.qnet", "--set", "S=3", "--set", "D=2" } );
  CHECK( r.out == "L0=0 L1=0 L2=0 L3=2\n" );
  CHECK( run_cli( { "circuit", "adder" } ).status == 2 );

  const auto a = run_cli( { "circuit", "mux", "-n", "2", "--v2", "4" } );
  const auto b = run_cli( { "circuit", "mux", "-n", "2", "--v2", "4" } );
  CHECK( a.out == b.out );
  CHECK( read_qnet( a.out ).v2() == 4 );
}

TEST_CASE( "parse errors exit with status 2 and a line number" )
{
  TempDir dir;
  write_text_file( dir / "broken.qnet", "quatnet 1\nfanin 2 2\ninput A\ng5 = NOT A\n" );
  const auto r = run_cli( { "sim", dir / "broken.qnet", "--set", "A=1" } );
  CHECK( r.status == 2 );
  CHECK( r.err.find( "line 4" ) != std::string::npos );
}
