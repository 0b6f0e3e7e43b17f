#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <quat/circuits.hpp>

using namespace quat;

namespace
{

Qudit q( int v ) { return Qudit{ v }; }

/* equality table: rows A, columns B */
constexpr int equality_table[4][4] = { { 3, 0, 0, 0 }, { 0, 3, 0, 0 }, { 0, 0, 3, 0 }, { 0, 0, 0, 3 } };

/* 1-to-4 decoder rows for S = 0..3; 'D' marks the data input */
constexpr int decoder_table[4][4] = { { 3, 0, 0, 0 }, { 0, 3, 0, 0 }, { 0, 0, 3, 0 }, { 0, 0, 0, 3 } };

Qudit output( std::vector<std::pair<std::string, Qudit>> const& outs, std::string const& name )
{
  for ( auto const& [n, v] : outs )
    if ( n == name )
      return v;
  throw std::out_of_range( name );
}

std::string selector( unsigned n, unsigned i ) { return n == 1 ? "S" : "S" + std::to_string( i + 1 ); }

} // namespace

TEST_CASE( "every equality realization matches the equality table" )
{
  for ( auto variant : all_equality_variants )
    for ( unsigned v = 2; v <= 4; ++v )
    {
      const auto nl = equality_netlist( variant, v, v );
      for ( int a = 0; a < 4; ++a )
        for ( int b = 0; b < 4; ++b )
        {
          CAPTURE( static_cast<int>( variant ) );
          CHECK( output( simulate( nl, { { "A", q( a ) }, { "B", q( b ) } } ), "E" ).value() == equality_table[a][b] );
        }
    }
}

TEST_CASE( "two-gate equality against 0 and 3" )
{
  for ( int c : { 0, 3 } )
  {
    const auto nl = unary_equality( q( c ) );
    CHECK( gate_count( nl ) == 2 );
    CHECK( count_kind( nl, GateKind::Bitswap ) == 1 );
    for ( int a = 0; a < 4; ++a )
      CHECK( output( simulate( nl, { { "A", q( a ) } } ), "E" ).value() == ( a == c ? 3 : 0 ) );
  }
  for ( int c : { 1, 2 } )
  {
    const auto nl = unary_equality( q( c ) );
    for ( int a = 0; a < 4; ++a )
      CHECK( output( simulate( nl, { { "A", q( a ) } } ), "E" ).value() == ( a == c ? 3 : 0 ) );
  }
}

TEST_CASE( "bitswap from equality" )
{
  const auto nl = bitswap_from_equality();
  CHECK( count_kind( nl, GateKind::Bitswap ) == 0 );
  for ( auto a : all_qudits )
    CHECK( output( simulate( nl, { { "A", a } } ), "Y" ) == ~a );
}

TEST_CASE( "1-to-4 decoder, demultiplexer and multiplexer" )
{
  const auto dec = decoder( 1 );
  const auto dem = demux( 1 );
  const auto mx = mux( 1 );
  for ( int s = 0; s < 4; ++s )
  {
    const auto d_out = simulate( dec, { { "S", q( s ) } } );
    for ( int j = 0; j < 4; ++j )
      CHECK( output( d_out, "L" + std::to_string( j ) ).value() == decoder_table[s][j] );
    for ( auto d : all_qudits )
    {
      const auto m_out = simulate( dem, { { "S", q( s ) }, { "D", d } } );
      for ( int j = 0; j < 4; ++j )
        CHECK( output( m_out, "L" + std::to_string( j ) ) == ( j == s ? d : q( 0 ) ) );
    }
  }
  /* multiplexer: every data assignment and selector */
  for ( std::size_t row = 0; row < 256; ++row )
  {
    const auto data = row_vector( row, 4 );
    for ( int s = 0; s < 4; ++s )
    {
      Bindings b{ { "S", q( s ) } };
      for ( int j = 0; j < 4; ++j )
        b["D" + std::to_string( j )] = data[j];
      CHECK( output( simulate( mx, b ), "M" ) == data[s] );
    }
  }
}

TEST_CASE( "2-to-16 structure" )
{
  const auto dec = decoder( 2 );
  CHECK( count_kind( dec, GateKind::Eq ) == 8 );
  CHECK( count_kind( dec, GateKind::And ) == 16 );
  CHECK( gate_count( dec ) == 24 );

  const auto dem = demux( 2, 3 );
  CHECK( count_kind( dem, GateKind::And ) == 16 );
  for ( auto const& g : dem.gates() )
    if ( g.kind == GateKind::And )
      CHECK( g.inputs.size() == 3 );

  const auto base = demux( 2, 3 );
  const auto mx = mux( 2, 3, 2 );
  CHECK( count_kind( mx, GateKind::Or ) == 15 );
  CHECK( count_kind( mx, GateKind::And ) == count_kind( base, GateKind::And ) );
}

TEST_CASE( "decoders are one-hot" )
{
  for ( unsigned n = 1; n <= 2; ++n )
    for ( bool use_min : { false, true } )
      for ( bool expand : { false, true } )
        for ( unsigned v1 = 2; v1 <= 3; ++v1 )
        {
          const auto nl = decoder( n, v1, DecoderOptions{ use_min, expand } );
          for ( std::size_t row = 0; row < table_size( n ); ++row )
          {
            const auto s = row_vector( row, n );
            Bindings b;
            for ( unsigned i = 0; i < n; ++i )
              b[selector( n, i )] = s[i];
            const auto out = simulate( nl, b );
            for ( std::size_t j = 0; j < out.size(); ++j )
            {
              CHECK( out[j].first == "L" + std::to_string( j ) );
              CHECK( out[j].second.value() == ( j == row ? 3 : 0 ) );
            }
          }
        }
}

TEST_CASE( "expanded 2-to-16 decoder tally" )
{
  const auto nl = decoder( 2, 2, DecoderOptions{ false, true } );
  const auto tally = gate_tally( nl );
  CHECK( count_kind( nl, GateKind::Eq ) == 0 );
  CHECK( tally.at( "NOR" ) == 2 );
  CHECK( tally.at( "XNOR" ) == 4 );
  CHECK( tally.at( "AND(x,~x)" ) == 6 );
  CHECK( tally.at( "BITSWAP" ) == 6 );
}

TEST_CASE( "MIN and MAX reference expressions" )
{
  const auto emin = minmax_reference( Op::Min );
  const auto emax = minmax_reference( Op::Max );
  validate( emin );
  validate( emax );
  for ( auto a : all_qudits )
    for ( auto b : all_qudits )
    {
      const InputVector x{ a, b };
      CHECK( eval_sop( emin, x ) == q_min( a, b ) );
      CHECK( eval_sop( emax, x ) == q_max( a, b ) );
    }
  CHECK_THROWS_AS( minmax_reference( Op::And ), std::invalid_argument );
}

TEST_CASE( "circuit names and builder" )
{
  for ( int k = 0; k <= static_cast<int>( CircuitKind::MaxRef ); ++k )
  {
    const auto kind = static_cast<CircuitKind>( k );
    REQUIRE( parse_circuit_kind( circuit_name( kind ) ).has_value() );
    CHECK( *parse_circuit_kind( circuit_name( kind ) ) == kind );
    const auto nl = build_circuit( CircuitSpec{ kind, 1 } );
    CHECK_FALSE( nl.outputs().empty() );
  }
  CHECK_FALSE( parse_circuit_kind( "adder" ).has_value() );
  CHECK_THROWS_AS( decoder( 0 ), std::invalid_argument );
  const auto minref = build_circuit( CircuitSpec{ CircuitKind::MinRef, 1 } );
  for ( auto a : all_qudits )
    for ( auto b : all_qudits )
      CHECK( output( simulate( minref, { { "X1", a }, { "X2", b } } ), "F" ) == q_min( a, b ) );
}
