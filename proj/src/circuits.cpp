#include <quat/circuits.hpp>

#include <array>
#include <stdexcept>

namespace quat
{

namespace
{

struct circuit_entry
{
  CircuitKind kind;
  std::string_view name;
};

constexpr std::array<circuit_entry, 13> circuit_names = { { { CircuitKind::EqualitySop, "equality-sop" },
                                                            { CircuitKind::EqualityXnor, "equality-xnor" },
                                                            { CircuitKind::EqualityNor, "equality-nor" },
                                                            { CircuitKind::EqualityOutwardAnd, "equality-outward-and" },
                                                            { CircuitKind::EqualityOutwardOr, "equality-outward-or" },
                                                            { CircuitKind::EqZero, "eq-zero" },
                                                            { CircuitKind::EqThree, "eq-three" },
                                                            { CircuitKind::BitswapFromEq, "bitswap-from-eq" },
                                                            { CircuitKind::Decoder, "decoder" },
                                                            { CircuitKind::Demux, "demux" },
                                                            { CircuitKind::Mux, "mux" },
                                                            { CircuitKind::MinRef, "min-ref" },
                                                            { CircuitKind::MaxRef, "max-ref" } } };

void check_selectors( unsigned n )
{
  if ( n < 1 || n > max_table_arity / 2 )
  {
    throw std::invalid_argument( "selector count must be in 1.." + std::to_string( max_table_arity / 2 ) + ", got " +
                                 std::to_string( n ) );
  }
}

std::string selector_name( unsigned n, unsigned i ) { return n == 1 ? "S" : "S" + std::to_string( i + 1 ); }

/* shared constants and E(S_i, c) literals of the selector-driven circuits */
class SelectorBank
{
public:
  SelectorBank( Netlist& nl, unsigned n, bool expand ) : nl_( nl ), n_( n ), expand_( expand ) {}

  void add_inputs()
  {
    for ( unsigned i = 0; i < n_; ++i )
    {
      selectors_.push_back( nl_.add_input( selector_name( n_, i ) ) );
    }
  }

  GateId constant( int c )
  {
    if ( !consts_[c] )
    {
      consts_[c] = nl_.add_const( Qudit{ c } );
    }
    return *consts_[c];
  }

  void build_literals()
  {
    literals_.assign( n_, {} );
    swapped_.assign( n_, std::nullopt );
    for ( unsigned i = 0; i < n_; ++i )
    {
      for ( int c = 0; c < 4; ++c )
      {
        literals_[i][c] = expand_ ? expanded( i, c ) : nl_.add_gate( GateKind::Eq, { selectors_[i], constant( c ) } );
      }
    }
  }

  GateId literal( unsigned i, int c ) const { return literals_[i][c]; }

  /// Literal leaves for output j, most significant selector first.
  std::vector<GateId> minterm( std::size_t j ) const
  {
    std::vector<GateId> leaves( n_ );
    for ( unsigned i = n_; i-- > 0; )
    {
      leaves[i] = literal( i, static_cast<int>( j & 3 ) );
      j >>= 2;
    }
    return leaves;
  }

private:
  GateId swap_of_selector( unsigned i )
  {
    if ( !swapped_[i] )
    {
      swapped_[i] = nl_.add_gate( GateKind::Bitswap, { selectors_[i] } );
    }
    return *swapped_[i];
  }

  /* E(S,0) = NOR(S, ~S); E(S,3) = S.~S; E(S,c) = XNOR(S,c).~XNOR(S,c) otherwise */
  GateId expanded( unsigned i, int c )
  {
    const auto s = selectors_[i];
    if ( c == 0 )
    {
      return nl_.add_gate( GateKind::Nor, { s, swap_of_selector( i ) } );
    }
    if ( c == 3 )
    {
      return nl_.add_gate( GateKind::And, { s, swap_of_selector( i ) } );
    }
    const auto same = nl_.add_gate( GateKind::Xnor, { s, constant( c ) } );
    return nl_.add_gate( GateKind::And, { same, nl_.add_gate( GateKind::Bitswap, { same } ) } );
  }

  Netlist& nl_;
  unsigned n_;
  bool expand_;
  std::vector<GateId> selectors_;
  std::array<std::optional<GateId>, 4> consts_;
  std::vector<std::array<GateId, 4>> literals_;
  std::vector<std::optional<GateId>> swapped_;
};

Netlist equality_sop( unsigned v1, unsigned v2 )
{
  Netlist nl( v1, v2 );
  struct Lits
  {
    GateId plain, inv, swap, swap_inv;
  };
  auto literals = [&nl]( GateId x ) {
    const auto inv = nl.add_gate( GateKind::Not, { x } );
    const auto swap = nl.add_gate( GateKind::Bitswap, { x } );
    const auto swap_inv = nl.add_gate( GateKind::Bitswap, { inv } );
    return Lits{ x, inv, swap, swap_inv };
  };
  const auto a = literals( nl.add_input( "A" ) );
  const auto b = literals( nl.add_input( "B" ) );

  const std::array<std::array<GateId, 4>, 4> products = { {
      { a.swap_inv, a.inv, b.swap_inv, b.inv },
      { a.swap_inv, a.plain, b.swap_inv, b.plain },
      { a.swap, a.inv, b.swap, b.inv },
      { a.swap, a.plain, b.swap, b.plain },
  } };
  std::vector<GateId> terms;
  for ( auto const& p : products )
  {
    terms.push_back( build_tree( nl, GateKind::And, p, v1 ) );
  }
  nl.set_output( "E", build_tree( nl, GateKind::Or, terms, v2 ) );
  return nl;
}

} // namespace

std::string_view circuit_name( CircuitKind kind ) noexcept
{
  for ( auto const& e : circuit_names )
  {
    if ( e.kind == kind )
    {
      return e.name;
    }
  }
  return "?";
}

std::optional<CircuitKind> parse_circuit_kind( std::string_view name ) noexcept
{
  for ( auto const& e : circuit_names )
  {
    if ( e.name == name )
    {
      return e.kind;
    }
  }
  return std::nullopt;
}

Netlist equality_netlist( EqualityVariant variant, unsigned v1, unsigned v2 )
{
  if ( variant == EqualityVariant::SumOfProducts )
  {
    return equality_sop( v1, v2 );
  }

  Netlist nl( v1, v2 );
  const auto a = nl.add_input( "A" );
  const auto b = nl.add_input( "B" );
  GateId out = 0;
  switch ( variant )
  {
  case EqualityVariant::XnorSwap: {
    const auto same = nl.add_gate( GateKind::Xnor, { a, b } );
    out = nl.add_gate( GateKind::And, { same, nl.add_gate( GateKind::Bitswap, { same } ) } );
    break;
  }
  case EqualityVariant::Nor: {
    const auto diff = nl.add_gate( GateKind::Xor, { a, b } );
    out = nl.add_gate( GateKind::Nor, { diff, nl.add_gate( GateKind::Bitswap, { diff } ) } );
    break;
  }
  case EqualityVariant::OutwardAnd: {
    const auto diff = nl.add_gate( GateKind::Xor, { a, b } );
    const auto swapped = nl.add_gate( GateKind::Bitswap, { diff } );
    out = nl.add_gate( GateKind::And, { nl.add_gate( GateKind::Outward, { diff } ),
                                        nl.add_gate( GateKind::Outward, { swapped } ) } );
    break;
  }
  case EqualityVariant::OutwardOr: {
    const auto diff = nl.add_gate( GateKind::Xor, { a, b } );
    const auto either = nl.add_gate( GateKind::Or, { diff, nl.add_gate( GateKind::Bitswap, { diff } ) } );
    out = nl.add_gate( GateKind::Outward, { either } );
    break;
  }
  case EqualityVariant::SumOfProducts:
    break;
  }
  nl.set_output( "E", out );
  return nl;
}

Netlist unary_equality( Qudit c )
{
  Netlist nl;
  const auto a = nl.add_input( "A" );
  GateId out = 0;
  switch ( c.value() )
  {
  case 0:
    out = nl.add_gate( GateKind::Nor, { a, nl.add_gate( GateKind::Bitswap, { a } ) } );
    break;
  case 3:
    out = nl.add_gate( GateKind::And, { a, nl.add_gate( GateKind::Bitswap, { a } ) } );
    break;
  default:
    out = nl.add_gate( GateKind::Eq, { a, nl.add_const( c ) } );
    break;
  }
  nl.set_output( "E", out );
  return nl;
}

Netlist bitswap_from_equality()
{
  Netlist nl;
  const auto a = nl.add_input( "A" );
  std::array<GateId, 4> k{};
  for ( int c = 1; c < 4; ++c )
  {
    k[c] = nl.add_const( Qudit{ c } );
  }
  const auto is1 = nl.add_gate( GateKind::Eq, { a, k[1] } );
  const auto is2 = nl.add_gate( GateKind::Eq, { a, k[2] } );
  const auto is3 = nl.add_gate( GateKind::Eq, { a, k[3] } );
  const std::array<GateId, 3> terms = { nl.add_gate( GateKind::And, { is1, k[2] } ),
                                        nl.add_gate( GateKind::And, { is2, k[1] } ), is3 };
  nl.set_output( "Y", build_tree( nl, GateKind::Or, terms, 2 ) );
  return nl;
}

Netlist decoder( unsigned n, unsigned v1, DecoderOptions options )
{
  check_selectors( n );
  Netlist nl( v1, 2 );
  SelectorBank bank( nl, n, options.expand_equality );
  bank.add_inputs();
  bank.build_literals();

  const auto conj = options.use_min ? GateKind::Min : GateKind::And;
  const std::size_t outputs = table_size( n );
  for ( std::size_t j = 0; j < outputs; ++j )
  {
    const auto leaves = bank.minterm( j );
    nl.set_output( "L" + std::to_string( j ), build_tree( nl, conj, leaves, v1 ) );
  }
  return nl;
}

Netlist demux( unsigned n, unsigned v1 )
{
  check_selectors( n );
  Netlist nl( v1, 2 );
  SelectorBank bank( nl, n, false );
  bank.add_inputs();
  const auto data = nl.add_input( "D" );
  bank.build_literals();

  const std::size_t outputs = table_size( n );
  for ( std::size_t j = 0; j < outputs; ++j )
  {
    auto leaves = bank.minterm( j );
    leaves.push_back( data );
    nl.set_output( "L" + std::to_string( j ), build_tree( nl, GateKind::And, leaves, v1 ) );
  }
  return nl;
}

Netlist mux( unsigned n, unsigned v1, unsigned v2 )
{
  check_selectors( n );
  Netlist nl( v1, v2 );
  const std::size_t lines = table_size( n );
  std::vector<GateId> data;
  for ( std::size_t j = 0; j < lines; ++j )
  {
    data.push_back( nl.add_input( "D" + std::to_string( j ) ) );
  }
  SelectorBank bank( nl, n, false );
  bank.add_inputs();
  bank.build_literals();

  std::vector<GateId> terms;
  for ( std::size_t j = 0; j < lines; ++j )
  {
    auto leaves = bank.minterm( j );
    leaves.insert( leaves.begin(), data[j] );
    terms.push_back( build_tree( nl, GateKind::And, leaves, v1 ) );
  }
  nl.set_output( "M", build_tree( nl, GateKind::Or, terms, v2 ) );
  return nl;
}

SopExpr minmax_reference( Op which )
{
  if ( which != Op::Min && which != Op::Max )
  {
    throw std::invalid_argument( "reference expressions exist for MIN and MAX only" );
  }
  auto lit = []( unsigned var, LiteralKind kind ) { return Literal{ var, kind, Qudit{} }; };
  constexpr auto plain = LiteralKind::Plain;
  constexpr auto swap = LiteralKind::Swap;
  constexpr auto swap_not = LiteralKind::SwapNot;
  const Qudit one{ 1 };
  const Qudit two{ 2 };

  SopExpr e;
  e.form = Form::II;
  e.arity = 2;
  if ( which == Op::Min )
  {
    /* (A.B + ~A.~!B.B + ~B.~!A.A).1 + (A.B).2, with !X standing for NOT X */
    e.products = { Product{ { lit( 1, plain ), lit( 2, plain ) }, one },
                   Product{ { lit( 1, swap ), lit( 2, swap_not ), lit( 2, plain ) }, one },
                   Product{ { lit( 2, swap ), lit( 1, swap_not ), lit( 1, plain ) }, one },
                   Product{ { lit( 1, plain ), lit( 2, plain ) }, two } };
  }
  else
  {
    /* (~A.A + ~B.B + ~!A.B + ~!B.A).1 + (A + B).2 */
    e.products = { Product{ { lit( 1, swap ), lit( 1, plain ) }, one },
                   Product{ { lit( 2, swap ), lit( 2, plain ) }, one },
                   Product{ { lit( 1, swap_not ), lit( 2, plain ) }, one },
                   Product{ { lit( 2, swap_not ), lit( 1, plain ) }, one },
                   Product{ { lit( 1, plain ) }, two },
                   Product{ { lit( 2, plain ) }, two } };
  }
  return e;
}

Netlist build_circuit( CircuitSpec const& spec, unsigned v1, unsigned v2 )
{
  switch ( spec.kind )
  {
  case CircuitKind::EqualitySop:
    return equality_netlist( EqualityVariant::SumOfProducts, v1, v2 );
  case CircuitKind::EqualityXnor:
    return equality_netlist( EqualityVariant::XnorSwap, v1, v2 );
  case CircuitKind::EqualityNor:
    return equality_netlist( EqualityVariant::Nor, v1, v2 );
  case CircuitKind::EqualityOutwardAnd:
    return equality_netlist( EqualityVariant::OutwardAnd, v1, v2 );
  case CircuitKind::EqualityOutwardOr:
    return equality_netlist( EqualityVariant::OutwardOr, v1, v2 );
  case CircuitKind::EqZero:
    return unary_equality( Qudit{ 0 } );
  case CircuitKind::EqThree:
    return unary_equality( Qudit{ 3 } );
  case CircuitKind::BitswapFromEq:
    return bitswap_from_equality();
  case CircuitKind::Decoder:
    return decoder( spec.n, v1 );
  case CircuitKind::Demux:
    return demux( spec.n, v1 );
  case CircuitKind::Mux:
    return mux( spec.n, v1, v2 );
  case CircuitKind::MinRef:
    return lower_sop( minmax_reference( Op::Min ), v1, v2 );
  case CircuitKind::MaxRef:
    return lower_sop( minmax_reference( Op::Max ), v1, v2 );
  }
  throw std::invalid_argument( "unknown circuit kind" );
}

std::map<std::string, std::size_t> gate_tally( Netlist const& nl )
{
  std::map<std::string, std::size_t> tally;
  auto const& gates = nl.gates();
  for ( auto const& g : gates )
  {
    if ( g.kind == GateKind::Input || g.kind == GateKind::Const )
    {
      continue;
    }
    ++tally[std::string( gate_kind_name( g.kind ) )];
    if ( g.kind == GateKind::And && g.inputs.size() == 2 )
    {
      auto swaps = [&]( GateId s, GateId x ) {
        return gates[s].kind == GateKind::Bitswap && gates[s].inputs.front() == x;
      };
      if ( swaps( g.inputs[0], g.inputs[1] ) || swaps( g.inputs[1], g.inputs[0] ) )
      {
        ++tally["AND(x,~x)"];
      }
    }
  }
  return tally;
}

} // namespace quat
