#include "cli.hpp"

#include <quat/circuits.hpp>
#include <quat/function.hpp>
#include <quat/io.hpp>
#include <quat/netlist.hpp>
#include <quat/qudit.hpp>
#include <quat/sop.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace quat::cli
{

namespace
{

struct Config
{
  std::string input;
  std::string output;
  std::string table;
  std::string net_output;
  std::string circuit;
  int form = 2;
  unsigned vars = 0;
  unsigned v1 = 2;
  unsigned v2 = 2;
  unsigned n0 = 1;
  unsigned d0 = 1;
  unsigned n = 1;
  unsigned random_arity = 0;
  std::uint64_t seed = 0;
  bool expand_equality = false;
  bool use_minmax = false;
  bool use_min = false;
  bool peephole = false;
  std::vector<std::string> bindings;
};

class usage_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

void emit( std::string const& text, std::string const& path, std::ostream& out )
{
  if ( path.empty() || path == "-" )
  {
    out << text;
  }
  else
  {
    write_text_file( path, text );
  }
}

bool looks_like_netlist( std::string_view text )
{
  const auto first = text.find_first_not_of( " \t\n" );
  return first != std::string_view::npos && text.substr( first ).starts_with( "quatnet" );
}

void print_bounds( BoundsReport const& r, std::ostream& out )
{
  out << "bound N=" << r.n_bound << " d=" << r.d_bound;
  if ( r.n_actual && r.d_actual )
  {
    out << " within=" << ( r.within() ? "yes" : "no" );
  }
  out << "\n";
}

BoundsReport form_bound( Form form, unsigned n, Config const& c )
{
  return form == Form::II ? bound_form2( n, c.v1, c.v2 ) : bound_form1( n, c.v1, c.v2, c.n0, c.d0 );
}

int cmd_tables( std::ostream& out )
{
  out << render_operator_tables();
  return exit_ok;
}

int cmd_synth( Config const& c, std::ostream& out )
{
  if ( c.input.empty() == ( c.random_arity == 0 ) )
  {
    throw usage_error( "synth needs exactly one of an input table or --random" );
  }
  const auto f = c.random_arity ? qf_random( c.random_arity, c.seed ) : read_qtt( read_text_file( c.input ) );
  auto e = c.form == 1 ? synthesize_form1( f ) : synthesize_form2( f );
  if ( c.peephole )
  {
    e = peephole_inverters( e );
  }
  if ( c.use_minmax )
  {
    e = form1_use_minmax( e );
  }
  emit( write_qsop( e ), c.output, out );
  if ( !c.output.empty() && c.output != "-" )
  {
    out << "form=" << c.form << " vars=" << e.arity << " products=" << e.products.size()
        << " literals=" << literal_count( e ) << "\n";
  }
  return exit_ok;
}

int cmd_lower( Config const& c, std::ostream& out )
{
  const auto e = read_qsop( read_text_file( c.input ) );
  LowerOptions options;
  options.expand_equality = c.expand_equality;
  options.use_minmax = c.use_minmax || e.minmax;
  const auto nl = lower_sop( e, c.v1, c.v2, options );
  emit( write_qnet( nl ), c.output, out );
  if ( !c.output.empty() && c.output != "-" )
  {
    out << "gates=" << gate_count( nl ) << " depth=" << depth( nl ) << "\n";
    if ( e.arity <= max_bound_arity )
    {
      auto cfg = c;
      if ( c.expand_equality && e.form == Form::I )
      {
        cfg.n0 = 5;
        cfg.d0 = 4;
      }
      print_bounds( measure( nl, form_bound( e.form, e.arity, cfg ) ), out );
    }
  }
  return exit_ok;
}

int cmd_sim( Config const& c, std::ostream& out )
{
  const auto nl = read_qnet( read_text_file( c.input ) );
  Bindings bindings;
  for ( auto const& b : c.bindings )
  {
    const auto eq = b.find( '=' );
    if ( eq == std::string::npos || eq == 0 || b.size() != eq + 2 || b[eq + 1] < '0' || b[eq + 1] > '3' )
    {
      throw usage_error( "binding '" + b + "' must look like NAME=<0-3>" );
    }
    if ( !bindings.emplace( b.substr( 0, eq ), Qudit{ b[eq + 1] - '0' } ).second )
    {
      throw usage_error( "input '" + b.substr( 0, eq ) + "' bound twice" );
    }
  }
  const auto results = simulate( nl, bindings );
  for ( std::size_t k = 0; k < results.size(); ++k )
  {
    out << ( k ? " " : "" ) << results[k].first << "=" << results[k].second.value();
  }
  out << "\n";
  return exit_ok;
}

int cmd_verify( Config const& c, std::ostream& out )
{
  const auto expected = read_qtt( read_text_file( c.table ) );
  const auto text = read_text_file( c.input );
  QFunction actual = expected;
  if ( looks_like_netlist( text ) )
  {
    const auto nl = read_qnet( text );
    if ( nl.inputs().size() != expected.arity() )
    {
      throw usage_error( "netlist has " + std::to_string( nl.inputs().size() ) + " inputs but the table has " +
                         std::to_string( expected.arity() ) + " variables" );
    }
    std::string name = c.net_output;
    if ( name.empty() )
    {
      if ( nl.outputs().size() != 1 )
      {
        throw usage_error( "netlist has several outputs; choose one with --output-name" );
      }
      name = nl.outputs().front().first;
    }
    if ( !nl.find_output( name ) )
    {
      throw usage_error( "netlist has no output '" + name + "'" );
    }
    actual = tabulate( nl, name );
  }
  else
  {
    const auto e = read_qsop( text );
    if ( e.arity != expected.arity() )
    {
      throw usage_error( "expression has " + std::to_string( e.arity ) + " variables but the table has " +
                         std::to_string( expected.arity() ) );
    }
    actual = tabulate( e );
  }
  const auto row = first_difference( expected, actual );
  if ( row == expected.size() )
  {
    out << "equivalent (" << expected.size() << " rows)\n";
    return exit_ok;
  }
  out << "mismatch at " << to_string( row_vector( row, expected.arity() ) ) << ": expected "
      << expected[row].value() << ", got " << actual[row].value() << "\n";
  return exit_mismatch;
}

int cmd_bounds( Config const& c, std::ostream& out )
{
  const auto r = form_bound( c.form == 1 ? Form::I : Form::II, c.vars, c );
  out << "N=" << r.n_bound << " d=" << r.d_bound << "\n";
  return exit_ok;
}

int cmd_circuit( Config const& c, std::ostream& out )
{
  const auto kind = parse_circuit_kind( c.circuit );
  if ( !kind )
  {
    throw usage_error( "unknown circuit '" + c.circuit + "'" );
  }
  Netlist nl;
  if ( *kind == CircuitKind::Decoder )
  {
    nl = decoder( c.n, c.v1, DecoderOptions{ c.use_min, c.expand_equality } );
  }
  else
  {
    nl = build_circuit( CircuitSpec{ *kind, c.n }, c.v1, c.v2 );
  }
  emit( write_qnet( nl ), c.output, out );
  return exit_ok;
}

std::string circuit_choices()
{
  std::string s;
  for ( int k = 0; k <= static_cast<int>( CircuitKind::MaxRef ); ++k )
  {
    s += ( k ? ", " : "" ) + std::string( circuit_name( static_cast<CircuitKind>( k ) ) );
  }
  return s;
}

} // namespace

int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  Config c;
  CLI::App app{ "Quaternary logic synthesis toolkit", "quat" };
  app.require_subcommand( 1 );

  auto fanin = [&c]( CLI::App* sub ) {
    sub->add_option( "--v1", c.v1, "AND fan-in limit" )->check( CLI::Range( 2u, 1024u ) );
    sub->add_option( "--v2", c.v2, "OR fan-in limit" )->check( CLI::Range( 2u, 1024u ) );
  };

  auto* tables = app.add_subcommand( "tables", "Print the operator truth tables" );

  auto* synth = app.add_subcommand( "synth", "Synthesize a truth table into an SOP" );
  synth->add_option( "input", c.input, "Truth table (.qtt)" );
  synth->add_option( "-o,--output", c.output, "SOP file to write (.qsop)" );
  synth->add_option( "--form", c.form, "SOP form" )->check( CLI::IsMember( { 1, 2 } ) );
  synth->add_flag( "--peephole", c.peephole, "Apply inverter rewrites" );
  synth->add_flag( "--minmax", c.use_minmax, "Use MIN/MAX (form 1 only)" );
  synth->add_option( "--random", c.random_arity, "Synthesize a random function of this arity" )
      ->check( CLI::Range( 1u, max_table_arity ) );
  synth->add_option( "--seed", c.seed, "Seed for --random" );

  auto* lower = app.add_subcommand( "lower", "Lower an SOP to a gate netlist" );
  lower->add_option( "input", c.input, "SOP file (.qsop)" )->required();
  lower->add_option( "-o,--output", c.output, "Netlist file to write (.qnet)" );
  fanin( lower );
  lower->add_flag( "--expand-equality", c.expand_equality, "Build equality literals from inverters" );
  lower->add_flag( "--minmax", c.use_minmax, "Use MIN/MAX gates (form 1 only)" );

  auto* sim = app.add_subcommand( "sim", "Simulate a netlist on one input assignment" );
  sim->add_option( "input", c.input, "Netlist (.qnet)" )->required();
  sim->add_option( "--set", c.bindings, "Input binding NAME=VALUE" );

  auto* verify = app.add_subcommand( "verify", "Check a netlist or SOP against a truth table" );
  verify->add_option( "input", c.input, "Netlist (.qnet) or SOP (.qsop)" )->required();
  verify->add_option( "table", c.table, "Truth table (.qtt)" )->required();
  verify->add_option( "--output-name", c.net_output, "Netlist output to check" );

  auto* bounds = app.add_subcommand( "bounds", "Worst-case gate count and depth" );
  bounds->add_option( "--form", c.form, "SOP form" )->check( CLI::IsMember( { 1, 2 } ) );
  bounds->add_option( "--vars", c.vars, "Variable count" )->required()->check( CLI::Range( 1u, max_bound_arity ) );
  fanin( bounds );
  bounds->add_option( "--n0", c.n0, "Gates per equality literal (form 1)" )->check( CLI::PositiveNumber );
  bounds->add_option( "--d0", c.d0, "Depth per equality literal (form 1)" )->check( CLI::PositiveNumber );

  auto* circuit = app.add_subcommand( "circuit", "Emit a named circuit as a netlist" );
  circuit->add_option( "name", c.circuit, "One of: " + circuit_choices() )->required();
  circuit->add_option( "-n", c.n, "Selector count" )->check( CLI::Range( 1u, max_table_arity / 2 ) );
  circuit->add_option( "-o,--output", c.output, "Netlist file to write (.qnet)" );
  fanin( circuit );
  circuit->add_flag( "--use-min", c.use_min, "Decoder: MIN gates in place of AND" );
  circuit->add_flag( "--expand-equality", c.expand_equality, "Decoder: equality from bitswap/NOR/XNOR/AND" );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( CLI::ParseError const& e )
  {
    const auto status = app.exit( e, out, err );
    return status == 0 ? exit_ok : exit_usage;
  }

  try
  {
    if ( *tables )
      return cmd_tables( out );
    if ( *synth )
      return cmd_synth( c, out );
    if ( *lower )
      return cmd_lower( c, out );
    if ( *sim )
      return cmd_sim( c, out );
    if ( *verify )
      return cmd_verify( c, out );
    if ( *bounds )
      return cmd_bounds( c, out );
    if ( *circuit )
      return cmd_circuit( c, out );
  }
  catch ( parse_error const& e )
  {
    err << "parse error: " << e.what() << "\n";
    return exit_usage;
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

} // namespace quat::cli
