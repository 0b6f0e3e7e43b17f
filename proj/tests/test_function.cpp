#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <quat/function.hpp>

#include <random>

using namespace quat;

TEST_CASE( "canonical row order puts X1 most significant" )
{
  const InputVector x{ Qudit{ 2 }, Qudit{ 1 }, Qudit{ 3 } };
  CHECK( row_index( x ) == 2 * 16 + 1 * 4 + 3 );
  CHECK( row_vector( 39, 3 ) == x );
  for ( std::size_t r = 0; r < 256; ++r )
  {
    CHECK( row_index( row_vector( r, 4 ) ) == r );
  }
}

TEST_CASE( "QFunction validates shape" )
{
  CHECK_THROWS_AS( QFunction( 0, {} ), std::invalid_argument );
  CHECK_THROWS_AS( QFunction( 1, std::vector<Qudit>( 3 ) ), std::invalid_argument );
  CHECK_THROWS_AS( QFunction( max_table_arity + 1, {} ), std::invalid_argument );
  try
  {
    qf_from_rows( 2, std::vector<Qudit>( 15 ) );
    FAIL( "expected a length error" );
  }
  catch ( std::invalid_argument const& e )
  {
    const std::string msg = e.what();
    CHECK( msg.find( "16" ) != std::string::npos );
    CHECK( msg.find( "15" ) != std::string::npos );
  }
  const auto f = qf_from_values( 1, { 0, 1, 2, 3 } );
  CHECK_THROWS_AS( f.eval( InputVector{ Qudit{ 0 }, Qudit{ 0 } } ), std::invalid_argument );
  CHECK_THROWS_AS( qf_from_values( 1, { 0, 1, 2, 4 } ), std::invalid_argument );
}

TEST_CASE( "evaluation reads the canonical row" )
{
  std::vector<int> values( 16 );
  for ( int a = 0; a < 4; ++a )
    for ( int b = 0; b < 4; ++b )
      values[4 * a + b] = ( a + 2 * b ) % 4;
  const auto f = qf_from_values( 2, values );
  for ( int a = 0; a < 4; ++a )
    for ( int b = 0; b < 4; ++b )
      CHECK( qf_eval( f, InputVector{ Qudit{ a }, Qudit{ b } } ).value() == ( a + 2 * b ) % 4 );
}

TEST_CASE( "tabulating an evaluator and evaluating back is the identity" )
{
  for ( unsigned n = 1; n <= 3; ++n )
  {
    const auto f = qf_random( n, 100 + n );
    const auto g = qf_of_evaluator( n, [&f]( InputVector const& x ) { return f.eval( x ); } );
    CHECK( f == g );
  }
}

TEST_CASE( "evaluator failures carry the input vector" )
{
  try
  {
    qf_of_evaluator( 2, []( InputVector const& x ) -> Qudit {
      if ( x[0].value() == 2 && x[1].value() == 1 )
        throw std::runtime_error( "boom" );
      return Qudit{};
    } );
    FAIL( "expected evaluation_error" );
  }
  catch ( evaluation_error const& e )
  {
    CHECK( e.input() == InputVector{ Qudit{ 2 }, Qudit{ 1 } } );
  }
}

TEST_CASE( "minterm partition covers every non-zero row once" )
{
  for ( std::uint64_t seed = 0; seed < 20; ++seed )
  {
    const auto f = qf_random( 2, seed );
    const auto p = partition_minterms( f );
    std::size_t zeros = 0;
    for ( auto v : f.outputs() )
      zeros += v.value() == 0;
    CHECK( p.v1.size() + p.v2.size() + p.v3.size() + zeros == 16 );
    for ( auto const& x : p.v2 )
      CHECK( f.eval( x ).value() == 2 );
  }
}

TEST_CASE( "random tables follow the documented generator" )
{
  std::mt19937_64 gen( 7 );
  const auto f = qf_random( 2, 7 );
  for ( std::size_t r = 0; r < 16; ++r )
  {
    CHECK( f[r].value() == static_cast<int>( gen() >> 62 ) );
  }
  CHECK( qf_random( 3, 9 ) == qf_random( 3, 9 ) );
}

TEST_CASE( "first difference locates the earliest differing row" )
{
  const auto a = qf_from_values( 1, { 0, 1, 2, 3 } );
  const auto b = qf_from_values( 1, { 0, 1, 3, 3 } );
  CHECK( first_difference( a, a ) == 4 );
  CHECK( first_difference( a, b ) == 2 );
}
