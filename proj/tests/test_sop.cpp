#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <quat/sop.hpp>

#include <algorithm>

using namespace quat;

namespace
{

Qudit q( int v ) { return Qudit{ v }; }

Literal eq( unsigned var, int c ) { return Literal{ var, LiteralKind::Eq, q( c ) }; }
Literal lit( unsigned var, LiteralKind kind ) { return Literal{ var, kind, Qudit{} }; }

QFunction min_table()
{
  /* rows B, columns A in the order 0 1 3 2 */
  const int grid[4][4] = { { 0, 0, 0, 0 }, { 0, 1, 1, 1 }, { 0, 1, 3, 2 }, { 0, 1, 2, 2 } };
  const int order[4] = { 0, 1, 3, 2 };
  std::vector<int> v( 16 );
  for ( int r = 0; r < 4; ++r )
    for ( int c = 0; c < 4; ++c )
      v[4 * order[c] + order[r]] = grid[r][c];
  return qf_from_values( 2, v );
}

QFunction max_table()
{
  /* rows A, columns B in the order 0 1 3 2 */
  const int grid[4][4] = { { 0, 1, 3, 2 }, { 1, 1, 3, 2 }, { 3, 3, 3, 3 }, { 2, 2, 3, 2 } };
  const int order[4] = { 0, 1, 3, 2 };
  std::vector<int> v( 16 );
  for ( int r = 0; r < 4; ++r )
    for ( int c = 0; c < 4; ++c )
      v[4 * order[r] + order[c]] = grid[r][c];
  return qf_from_values( 2, v );
}

std::size_t count_weight( SopExpr const& e, int w )
{
  std::size_t n = 0;
  for ( auto const& p : e.products )
    n += p.weight.value() == w;
  return n;
}

} // namespace

TEST_CASE( "literal evaluation" )
{
  const InputVector x{ q( 1 ) };
  CHECK( lit( 1, LiteralKind::Plain ).eval( x ).value() == 1 );
  CHECK( lit( 1, LiteralKind::Not ).eval( x ).value() == 2 );
  CHECK( lit( 1, LiteralKind::Swap ).eval( x ).value() == 2 );
  CHECK( lit( 1, LiteralKind::SwapNot ).eval( x ).value() == 1 );
  CHECK( lit( 1, LiteralKind::Inward ).eval( x ).value() == 2 );
  CHECK( lit( 1, LiteralKind::Outward ).eval( x ).value() == 3 );
  CHECK( eq( 1, 1 ).eval( x ).value() == 3 );
  CHECK( eq( 1, 2 ).eval( x ).value() == 0 );
}

TEST_CASE( "form-I min-terms fire on exactly one input" )
{
  const InputVector v{ q( 2 ), q( 0 ), q( 3 ) };
  const auto p = minterm_form1( v, q( 2 ) );
  SopExpr e{ Form::I, 3, { p }, {}, false };
  const auto t = tabulate( e );
  for ( std::size_t r = 0; r < t.size(); ++r )
    CHECK( t[r].value() == ( r == row_index( v ) ? 2 : 0 ) );
  CHECK_THROWS_AS( minterm_form1( v, q( 0 ) ), std::invalid_argument );
}

TEST_CASE( "form-I synthesis reproduces tables and counts non-zero rows" )
{
  for ( std::uint64_t seed = 0; seed < 30; ++seed )
  {
    const auto f = qf_random( 2, seed );
    const auto e = synthesize_form1( f );
    CHECK( tabulate( e ) == f );
    const auto p = partition_minterms( f );
    CHECK( e.products.size() == p.v1.size() + p.v2.size() + p.v3.size() );
    CHECK( tabulate( form1_use_minmax( e ) ) == f );
  }
}

TEST_CASE( "binary halves follow the packed bit layout" )
{
  const auto f = min_table();
  const auto [low, high] = decompose_form2( f );
  CHECK( low.bit_arity == 4 );
  for ( std::uint32_t m = 0; m < 16; ++m )
  {
    const bool lo = std::find( low.ones.begin(), low.ones.end(), m ) != low.ones.end();
    const bool hi = std::find( high.ones.begin(), high.ones.end(), m ) != high.ones.end();
    CHECK( lo == f[m].low() );
    CHECK( hi == f[m].high() );
  }
}

TEST_CASE( "binary literals map to quaternary literals by half" )
{
  /* single variable: bit 1 is x1, bit 0 is x0 */
  auto kinds = []( Cube c, Half h ) { return transform_literals( { c }, h, 1 ).front(); };
  CHECK( kinds( Cube{ 1, 1 }, Half::Low ).literals.front().kind == LiteralKind::Plain );
  CHECK( kinds( Cube{ 1, 0 }, Half::Low ).literals.front().kind == LiteralKind::Not );
  CHECK( kinds( Cube{ 2, 2 }, Half::Low ).literals.front().kind == LiteralKind::Swap );
  CHECK( kinds( Cube{ 2, 0 }, Half::Low ).literals.front().kind == LiteralKind::SwapNot );
  CHECK( kinds( Cube{ 1, 1 }, Half::High ).literals.front().kind == LiteralKind::Swap );
  CHECK( kinds( Cube{ 1, 0 }, Half::High ).literals.front().kind == LiteralKind::SwapNot );
  CHECK( kinds( Cube{ 2, 2 }, Half::High ).literals.front().kind == LiteralKind::Plain );
  CHECK( kinds( Cube{ 2, 0 }, Half::High ).literals.front().kind == LiteralKind::Not );
  CHECK( kinds( Cube{ 1, 1 }, Half::Low ).weight.value() == 1 );
  CHECK( kinds( Cube{ 1, 1 }, Half::High ).weight.value() == 2 );
}

TEST_CASE( "form-II synthesis of MIN and MAX matches the hand covers" )
{
  const auto emin = synthesize_form2( min_table() );
  CHECK( tabulate( emin ) == min_table() );
  CHECK( count_weight( emin, 1 ) <= 3 );
  CHECK( count_weight( emin, 2 ) <= 1 );

  const auto emax = synthesize_form2( max_table() );
  CHECK( tabulate( emax ) == max_table() );
  CHECK( count_weight( emax, 1 ) <= 4 );
  CHECK( count_weight( emax, 2 ) <= 2 );
}

TEST_CASE( "form-II synthesis reproduces random tables" )
{
  for ( unsigned n = 1; n <= 3; ++n )
    for ( std::uint64_t seed = 0; seed < 10; ++seed )
    {
      const auto f = qf_random( n, seed );
      CHECK( tabulate( synthesize_form2( f ) ) == f );
    }
  CHECK_THROWS( synthesize_form2( qf_random( max_form2_arity + 1, 1 ) ) );
}

TEST_CASE( "empty and constant expressions" )
{
  const auto zero = qf_from_values( 1, { 0, 0, 0, 0 } );
  CHECK( synthesize_form1( zero ).products.empty() );
  CHECK( synthesize_form2( zero ).products.empty() );
  CHECK( tabulate( synthesize_form2( zero ) ) == zero );
  const auto three = qf_from_values( 1, { 3, 3, 3, 3 } );
  CHECK( tabulate( synthesize_form2( three ) ) == three );
}

TEST_CASE( "inward pattern over equality literals" )
{
  /* (X1^0 + X1^1).2 + (X1^2 + X1^3).1, all AND-ed with E(X2,1) */
  SopExpr e{ Form::I, 2, {}, {}, false };
  e.products = { Product{ { eq( 1, 0 ), eq( 2, 1 ) }, q( 2 ) }, Product{ { eq( 1, 1 ), eq( 2, 1 ) }, q( 2 ) },
                 Product{ { eq( 1, 2 ), eq( 2, 1 ) }, q( 1 ) }, Product{ { eq( 1, 3 ), eq( 2, 1 ) }, q( 1 ) } };
  const auto r = peephole_inverters( e );
  CHECK( tabulate( r ) == tabulate( e ) );
  REQUIRE( r.products.size() == 1 );
  CHECK( r.products[0].weight.value() == 3 );
  CHECK( std::count( r.products[0].literals.begin(), r.products[0].literals.end(), lit( 1, LiteralKind::Inward ) ) ==
         1 );
  REQUIRE( r.rewrites.size() == 1 );
  CHECK( r.rewrites[0].kind == RewriteKind::Inward );
}

TEST_CASE( "outward pattern over equality literals" )
{
  SopExpr e{ Form::I, 1, {}, {}, false };
  e.products = { Product{ { eq( 1, 0 ) }, q( 3 ) }, Product{ { eq( 1, 1 ) }, q( 3 ) } };
  const auto r = peephole_inverters( e );
  CHECK( tabulate( r ) == tabulate( e ) );
  REQUIRE( r.products.size() == 1 );
  CHECK( r.products[0].literals == std::vector<Literal>{ lit( 1, LiteralKind::Outward ) } );
}

TEST_CASE( "inverter patterns over bit literals" )
{
  /* NOT X.2 + bitswap X.1 is the inward inverter; with bitswap NOT X it is the outward one */
  SopExpr in{ Form::II, 1, {}, {}, false };
  in.products = { Product{ { lit( 1, LiteralKind::Swap ) }, q( 1 ) }, Product{ { lit( 1, LiteralKind::Not ) }, q( 2 ) } };
  const auto ri = peephole_inverters( in );
  CHECK( tabulate( ri ) == tabulate( in ) );
  CHECK( ri.products.size() == 1 );

  SopExpr out{ Form::II, 1, {}, {}, false };
  out.products = { Product{ { lit( 1, LiteralKind::SwapNot ) }, q( 1 ) },
                   Product{ { lit( 1, LiteralKind::Not ) }, q( 2 ) } };
  const auto ro = peephole_inverters( out );
  CHECK( tabulate( ro ) == tabulate( out ) );
  CHECK( ro.products.size() == 1 );
}

TEST_CASE( "peephole keeps truth tables on random functions" )
{
  for ( unsigned n = 1; n <= 3; ++n )
    for ( std::uint64_t seed = 0; seed < 15; ++seed )
    {
      const auto f = qf_random( n, seed * 31 + n );
      const auto e1 = synthesize_form1( f );
      const auto p1 = peephole_inverters( e1 );
      CHECK( tabulate( p1 ) == f );
      CHECK( p1.products.size() <= e1.products.size() );
      const auto e2 = synthesize_form2( f );
      const auto p2 = peephole_inverters( e2 );
      CHECK( tabulate( p2 ) == f );
      CHECK( p2.products.size() <= e2.products.size() );
    }
}

TEST_CASE( "MIN/MAX evaluation is rejected for form-II" )
{
  CHECK_THROWS_AS( form1_use_minmax( synthesize_form2( min_table() ) ), std::invalid_argument );
}

TEST_CASE( "validation catches malformed expressions" )
{
  SopExpr bad{ Form::II, 1, { Product{ { eq( 1, 0 ) }, q( 1 ) } }, {}, false };
  CHECK_THROWS_AS( validate( bad ), std::invalid_argument );
  SopExpr range{ Form::I, 1, { Product{ { eq( 2, 0 ) }, q( 1 ) } }, {}, false };
  CHECK_THROWS_AS( validate( range ), std::invalid_argument );
  CHECK_THROWS_AS( eval_sop( synthesize_form1( min_table() ), InputVector{ q( 1 ) } ), std::invalid_argument );
}
