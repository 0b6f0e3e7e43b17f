#include <quat/netlist.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <queue>
#include <random>
#include <stdexcept>
#include <tuple>

namespace quat
{

namespace
{

struct kind_entry
{
  GateKind kind;
  std::string_view name;
};

constexpr std::array<kind_entry, 15> kind_names = { { { GateKind::Input, "INPUT" },
                                                      { GateKind::Const, "CONST" },
                                                      { GateKind::And, "AND" },
                                                      { GateKind::Or, "OR" },
                                                      { GateKind::Not, "NOT" },
                                                      { GateKind::Bitswap, "BITSWAP" },
                                                      { GateKind::Xor, "XOR" },
                                                      { GateKind::Xnor, "XNOR" },
                                                      { GateKind::Eq, "EQ" },
                                                      { GateKind::Inward, "INWARD" },
                                                      { GateKind::Outward, "OUTWARD" },
                                                      { GateKind::Min, "MIN" },
                                                      { GateKind::Max, "MAX" },
                                                      { GateKind::Nand, "NAND" },
                                                      { GateKind::Nor, "NOR" } } };

Op op_of( GateKind kind )
{
  switch ( kind )
  {
  case GateKind::And:
    return Op::And;
  case GateKind::Or:
    return Op::Or;
  case GateKind::Not:
    return Op::Not;
  case GateKind::Bitswap:
    return Op::Bitswap;
  case GateKind::Xor:
    return Op::Xor;
  case GateKind::Xnor:
    return Op::Xnor;
  case GateKind::Eq:
    return Op::Eq;
  case GateKind::Inward:
    return Op::Inward;
  case GateKind::Outward:
    return Op::Outward;
  case GateKind::Min:
    return Op::Min;
  case GateKind::Max:
    return Op::Max;
  case GateKind::Nand:
    return Op::Nand;
  case GateKind::Nor:
    return Op::Nor;
  default:
    throw std::logic_error( "gate kind has no operator" );
  }
}

bool is_logic( GateKind kind ) { return kind != GateKind::Input && kind != GateKind::Const; }

std::vector<std::uint8_t> evaluate( Netlist const& nl, std::vector<std::uint8_t> values )
{
  auto const& gates = nl.gates();
  for ( std::size_t id = 0; id < gates.size(); ++id )
  {
    auto const& g = gates[id];
    switch ( g.kind )
    {
    case GateKind::Input:
      break;
    case GateKind::Const:
      values[id] = static_cast<std::uint8_t>( g.value.value() );
      break;
    default: {
      const Op op = op_of( g.kind );
      if ( is_unary( op ) )
      {
        values[id] = detail::eval_unary( op, values[g.inputs[0]] );
      }
      else
      {
        auto acc = values[g.inputs[0]];
        for ( std::size_t k = 1; k < g.inputs.size(); ++k )
        {
          acc = detail::eval_dyadic( op, acc, values[g.inputs[k]] );
        }
        values[id] = acc;
      }
      break;
    }
    }
  }
  return values;
}

/* literal gates shared across products while lowering */
class LiteralCache
{
public:
  explicit LiteralCache( Netlist& nl, std::vector<GateId> inputs, bool expand_equality )
      : nl_( nl ), inputs_( std::move( inputs ) ), expand_( expand_equality )
  {
  }

  GateId constant( Qudit value )
  {
    auto& slot = consts_[value.value()];
    if ( !slot )
    {
      slot = nl_.add_const( value );
    }
    return *slot;
  }

  GateId literal( Literal const& l )
  {
    const auto key = std::make_tuple( l.var, l.kind, l.constant.value() );
    if ( auto it = cache_.find( key ); it != cache_.end() )
    {
      return it->second;
    }
    const GateId x = inputs_.at( l.var - 1 );
    GateId id = x;
    switch ( l.kind )
    {
    case LiteralKind::Plain:
      return x;
    case LiteralKind::Not:
      id = nl_.add_gate( GateKind::Not, { x } );
      break;
    case LiteralKind::Swap:
      id = nl_.add_gate( GateKind::Bitswap, { x } );
      break;
    case LiteralKind::SwapNot:
      id = nl_.add_gate( GateKind::Bitswap, { literal( Literal{ l.var, LiteralKind::Not, Qudit{} } ) } );
      break;
    case LiteralKind::Inward:
      id = nl_.add_gate( GateKind::Inward, { x } );
      break;
    case LiteralKind::Outward:
      id = nl_.add_gate( GateKind::Outward, { x } );
      break;
    case LiteralKind::Eq:
      id = expand_ ? expanded_equality( x, l.constant ) : nl_.add_gate( GateKind::Eq, { x, constant( l.constant ) } );
      break;
    }
    cache_.emplace( key, id );
    return id;
  }

private:
  /* E(A,B) = !(A xor B) . !(~(A xor B)) */
  GateId expanded_equality( GateId x, Qudit c )
  {
    const auto diff = nl_.add_gate( GateKind::Xor, { x, constant( c ) } );
    const auto swapped = nl_.add_gate( GateKind::Bitswap, { diff } );
    const auto left = nl_.add_gate( GateKind::Outward, { diff } );
    const auto right = nl_.add_gate( GateKind::Outward, { swapped } );
    return nl_.add_gate( GateKind::And, { left, right } );
  }

  Netlist& nl_;
  std::vector<GateId> inputs_;
  bool expand_;
  std::array<std::optional<GateId>, 4> consts_;
  std::map<std::tuple<unsigned, LiteralKind, int>, GateId> cache_;
};

Netlist lower_form1( SopExpr const& e, unsigned v1, unsigned v2, LowerOptions options )
{
  Netlist nl( v1, v2 );
  std::vector<GateId> inputs;
  for ( unsigned i = 1; i <= e.arity; ++i )
  {
    inputs.push_back( nl.add_input( "X" + std::to_string( i ) ) );
  }
  LiteralCache lits( nl, inputs, options.expand_equality );

  const bool minmax = options.use_minmax || e.minmax;
  const auto conj = minmax ? GateKind::Min : GateKind::And;
  const auto disj = minmax ? GateKind::Max : GateKind::Or;

  std::vector<GateId> terms;
  for ( auto const& p : e.products )
  {
    std::vector<GateId> leaves;
    for ( auto const& l : p.literals )
    {
      leaves.push_back( lits.literal( l ) );
    }
    if ( p.weight.value() != 3 || leaves.empty() )
    {
      leaves.push_back( lits.constant( p.weight ) );
    }
    terms.push_back( build_tree( nl, conj, leaves, v1 ) );
  }

  const GateId out = terms.empty() ? lits.constant( Qudit{ 0 } ) : build_tree( nl, disj, terms, v2 );
  nl.set_output( "F", out );
  return nl;
}

Netlist lower_form2( SopExpr const& e, unsigned v1, unsigned v2, LowerOptions options )
{
  if ( options.use_minmax )
  {
    throw std::invalid_argument( "MIN/MAX lowering is only valid for form-I expressions" );
  }
  Netlist nl( v1, v2 );
  std::vector<GateId> inputs;
  for ( unsigned i = 1; i <= e.arity; ++i )
  {
    inputs.push_back( nl.add_input( "X" + std::to_string( i ) ) );
  }
  LiteralCache lits( nl, inputs, options.expand_equality );

  auto product_root = [&]( Product const& p ) -> std::optional<GateId> {
    if ( p.literals.empty() )
    {
      return std::nullopt;
    }
    std::vector<GateId> leaves;
    for ( auto const& l : p.literals )
    {
      leaves.push_back( lits.literal( l ) );
    }
    return build_tree( nl, GateKind::And, leaves, v1 );
  };

  std::vector<GateId> finals;

  /* each half is OR-ed first and masked by its weight once */
  for ( int w : { 1, 2 } )
  {
    std::vector<GateId> roots;
    bool tautology = false;
    for ( auto const& p : e.products )
    {
      if ( p.weight.value() != w )
      {
        continue;
      }
      auto root = product_root( p );
      if ( !root )
      {
        tautology = true;
        break;
      }
      roots.push_back( *root );
    }
    if ( tautology )
    {
      finals.push_back( lits.constant( Qudit{ w } ) );
    }
    else if ( !roots.empty() )
    {
      const auto sum = build_tree( nl, GateKind::Or, roots, v2 );
      finals.push_back( nl.add_gate( GateKind::And, { sum, lits.constant( Qudit{ w } ) } ) );
    }
  }

  /* products produced by inverter rewriting are unmasked */
  for ( auto const& p : e.products )
  {
    if ( p.weight.value() == 3 )
    {
      auto root = product_root( p );
      finals.push_back( root ? *root : lits.constant( Qudit{ 3 } ) );
    }
  }

  const GateId out = finals.empty() ? lits.constant( Qudit{ 0 } ) : build_tree( nl, GateKind::Or, finals, v2 );
  nl.set_output( "F", out );
  return nl;
}

void check_fanin( unsigned v1, unsigned v2 )
{
  if ( v1 < 2 || v2 < 2 )
  {
    throw std::invalid_argument( "fan-in limits must be at least 2, got v1=" + std::to_string( v1 ) +
                                 " v2=" + std::to_string( v2 ) );
  }
}

void check_bound_args( unsigned n, unsigned v1, unsigned v2 )
{
  if ( n < 1 || n > max_bound_arity )
  {
    throw std::invalid_argument( "bound arity must be in 1.." + std::to_string( max_bound_arity ) );
  }
  check_fanin( v1, v2 );
}

} // namespace

std::string_view gate_kind_name( GateKind kind ) noexcept
{
  for ( auto const& e : kind_names )
  {
    if ( e.kind == kind )
    {
      return e.name;
    }
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind( std::string_view name ) noexcept
{
  for ( auto const& e : kind_names )
  {
    if ( e.name == name )
    {
      return e.kind;
    }
  }
  return std::nullopt;
}

Netlist::Netlist( unsigned v1, unsigned v2 ) : v1_( v1 ), v2_( v2 ) { check_fanin( v1, v2 ); }

GateId Netlist::add_input( std::string name )
{
  if ( name.empty() )
  {
    throw std::invalid_argument( "input name must not be empty" );
  }
  if ( find_input( name ) )
  {
    throw std::invalid_argument( "duplicate input '" + name + "'" );
  }
  const auto id = static_cast<GateId>( gates_.size() );
  gates_.push_back( Gate{ GateKind::Input, {}, Qudit{}, std::move( name ) } );
  levels_.push_back( 0 );
  inputs_.push_back( id );
  return id;
}

GateId Netlist::add_const( Qudit value )
{
  const auto id = static_cast<GateId>( gates_.size() );
  gates_.push_back( Gate{ GateKind::Const, {}, value, {} } );
  levels_.push_back( 0 );
  return id;
}

GateId Netlist::add_gate( GateKind kind, std::vector<GateId> inputs )
{
  if ( !is_logic( kind ) )
  {
    throw std::invalid_argument( "use add_input/add_const for source gates" );
  }
  const auto name = std::string( gate_kind_name( kind ) );
  const std::size_t n = inputs.size();
  if ( is_tree_kind( kind ) )
  {
    const unsigned limit = ( kind == GateKind::And || kind == GateKind::Min ) ? v1_ : v2_;
    if ( n < 2 || n > limit )
    {
      throw std::invalid_argument( name + " gate takes 2.." + std::to_string( limit ) + " operands, got " +
                                   std::to_string( n ) );
    }
  }
  else
  {
    const std::size_t arity = is_unary( op_of( kind ) ) ? 1 : 2;
    if ( n != arity )
    {
      throw std::invalid_argument( name + " gate takes " + std::to_string( arity ) + " operands, got " +
                                   std::to_string( n ) );
    }
  }
  for ( auto in : inputs )
  {
    if ( in >= gates_.size() )
    {
      throw std::invalid_argument( name + " gate references undefined gate g" + std::to_string( in ) );
    }
  }
  std::size_t deepest = 0;
  for ( auto in : inputs )
  {
    deepest = std::max( deepest, levels_[in] );
  }
  const auto id = static_cast<GateId>( gates_.size() );
  gates_.push_back( Gate{ kind, std::move( inputs ), Qudit{}, {} } );
  levels_.push_back( deepest + 1 );
  return id;
}

void Netlist::set_output( std::string name, GateId id )
{
  if ( id >= gates_.size() )
  {
    throw std::invalid_argument( "output '" + name + "' references undefined gate g" + std::to_string( id ) );
  }
  if ( find_output( name ) )
  {
    throw std::invalid_argument( "duplicate output '" + name + "'" );
  }
  outputs_.emplace_back( std::move( name ), id );
}

std::optional<GateId> Netlist::find_input( std::string_view name ) const
{
  for ( auto id : inputs_ )
  {
    if ( gates_[id].name == name )
    {
      return id;
    }
  }
  return std::nullopt;
}

std::optional<GateId> Netlist::find_output( std::string_view name ) const
{
  for ( auto const& [n, id] : outputs_ )
  {
    if ( n == name )
    {
      return id;
    }
  }
  return std::nullopt;
}

GateId build_tree( Netlist& nl, GateKind kind, std::span<const GateId> leaves, unsigned v )
{
  if ( leaves.empty() )
  {
    throw std::invalid_argument( "cannot build a gate tree over zero operands" );
  }
  if ( !is_tree_kind( kind ) )
  {
    throw std::invalid_argument( "tree gates must be AND, OR, MIN or MAX" );
  }
  if ( v < 2 )
  {
    throw std::invalid_argument( "fan-in limit must be at least 2" );
  }
  if ( leaves.size() == 1 )
  {
    return leaves.front();
  }

  /* shallowest operands are combined first; the only partially filled gate
     is built first so that every later gate is full */
  using Item = std::tuple<std::size_t, std::size_t, GateId>; // level, order, id
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  std::size_t order = 0;
  for ( auto leaf : leaves )
  {
    queue.emplace( nl.level( leaf ), order++, leaf );
  }

  auto combine = [&]( std::size_t width ) {
    std::vector<GateId> operands;
    std::size_t level = 0;
    for ( std::size_t i = 0; i < width; ++i )
    {
      auto [l, o, id] = queue.top();
      queue.pop();
      level = std::max( level, l );
      operands.push_back( id );
    }
    const auto id = nl.add_gate( kind, std::move( operands ) );
    queue.emplace( level + 1, order++, id );
  };

  const std::size_t k = leaves.size();
  const std::size_t rest = ( k - 1 ) % ( v - 1 );
  combine( rest == 0 ? std::min<std::size_t>( v, k ) : rest + 1 );
  while ( queue.size() > 1 )
  {
    combine( v );
  }
  return std::get<2>( queue.top() );
}

Netlist lower_sop( SopExpr const& e, unsigned v1, unsigned v2, LowerOptions options )
{
  validate( e );
  return e.form == Form::I ? lower_form1( e, v1, v2, options ) : lower_form2( e, v1, v2, options );
}

std::vector<std::pair<std::string, Qudit>> simulate( Netlist const& nl, Bindings const& bindings )
{
  for ( auto const& [name, value] : bindings )
  {
    if ( !nl.find_input( name ) )
    {
      throw std::invalid_argument( "binding for unknown input '" + name + "'" );
    }
  }
  std::vector<Qudit> ordered;
  for ( auto id : nl.inputs() )
  {
    auto const& name = nl.gate( id ).name;
    auto it = bindings.find( name );
    if ( it == bindings.end() )
    {
      throw std::invalid_argument( "unbound input '" + name + "'" );
    }
    ordered.push_back( it->second );
  }
  auto values = simulate_ordered( nl, ordered );
  std::vector<std::pair<std::string, Qudit>> out;
  for ( std::size_t i = 0; i < values.size(); ++i )
  {
    out.emplace_back( nl.outputs()[i].first, values[i] );
  }
  return out;
}

std::vector<Qudit> simulate_ordered( Netlist const& nl, std::span<const Qudit> inputs )
{
  if ( inputs.size() != nl.inputs().size() )
  {
    throw std::invalid_argument( "netlist has " + std::to_string( nl.inputs().size() ) + " inputs, got " +
                                 std::to_string( inputs.size() ) + " values" );
  }
  std::vector<std::uint8_t> values( nl.gates().size(), 0 );
  for ( std::size_t i = 0; i < inputs.size(); ++i )
  {
    values[nl.inputs()[i]] = static_cast<std::uint8_t>( inputs[i].value() );
  }
  values = evaluate( nl, std::move( values ) );
  std::vector<Qudit> out;
  for ( auto const& [name, id] : nl.outputs() )
  {
    out.emplace_back( values[id] );
  }
  return out;
}

QFunction tabulate( Netlist const& nl, std::string_view output )
{
  const auto out = nl.find_output( output );
  if ( !out )
  {
    throw std::invalid_argument( "netlist has no output '" + std::string( output ) + "'" );
  }
  const auto arity = static_cast<unsigned>( nl.inputs().size() );
  if ( arity < 1 || arity > max_table_arity )
  {
    throw std::invalid_argument( "cannot tabulate a netlist with " + std::to_string( arity ) + " inputs" );
  }
  std::vector<Qudit> table( table_size( arity ) );
  std::vector<std::uint8_t> values( nl.gates().size(), 0 );
  for ( std::size_t row = 0; row < table.size(); ++row )
  {
    for ( unsigned i = 0; i < arity; ++i )
    {
      values[nl.inputs()[i]] = static_cast<std::uint8_t>( ( row >> ( 2 * ( arity - 1 - i ) ) ) & 3 );
    }
    values = evaluate( nl, std::move( values ) );
    table[row] = Qudit{ values[*out] };
  }
  return QFunction{ arity, std::move( table ) };
}

std::size_t gate_count( Netlist const& nl )
{
  return static_cast<std::size_t>(
      std::count_if( nl.gates().begin(), nl.gates().end(), []( Gate const& g ) { return is_logic( g.kind ); } ) );
}

std::size_t count_kind( Netlist const& nl, GateKind kind )
{
  return static_cast<std::size_t>(
      std::count_if( nl.gates().begin(), nl.gates().end(), [kind]( Gate const& g ) { return g.kind == kind; } ) );
}

std::size_t depth( Netlist const& nl )
{
  std::size_t d = 0;
  for ( auto const& [name, id] : nl.outputs() )
  {
    d = std::max( d, nl.level( id ) );
  }
  return d;
}

std::uint64_t ceil_div( std::uint64_t a, std::uint64_t b ) { return ( a + b - 1 ) / b; }

std::uint64_t ceil_log( std::uint64_t x, std::uint64_t v )
{
  std::uint64_t d = 0;
  std::uint64_t reach = 1;
  while ( reach < x )
  {
    reach *= v;
    ++d;
  }
  return d;
}

BoundsReport bound_form2( unsigned n, unsigned v1, unsigned v2 )
{
  check_bound_args( n, v1, v2 );
  const std::uint64_t cells = std::uint64_t{ 1 } << ( 2 * n );
  const std::uint64_t half = cells / 2;
  const std::uint64_t literal_depth = 2;

  BoundsReport r;
  r.n_bound = 3ull * n + cells * ceil_div( 2ull * n - 1, v1 - 1 ) + 2 * ceil_div( half - 1, v2 - 1 ) + 3;
  r.d_bound = literal_depth + ceil_log( 2ull * n, v1 ) + ceil_log( half, v2 ) + 2;
  return r;
}

BoundsReport bound_form1( unsigned n, unsigned v1, unsigned v2, unsigned n0, unsigned d0 )
{
  check_bound_args( n, v1, v2 );
  const std::uint64_t rows = std::uint64_t{ 1 } << ( 2 * n );

  BoundsReport r;
  r.n_bound = 4ull * n * n0 + rows * ceil_div( n, v1 - 1 ) + ceil_div( rows - 1, v2 - 1 );
  r.d_bound = d0 + ceil_log( n + 1ull, v1 ) + ceil_log( rows, v2 );
  return r;
}

QFunction worst_case_function( unsigned n, Form form )
{
  if ( n < 1 || n > max_table_arity )
  {
    throw std::invalid_argument( "worst-case arity must be in 1.." + std::to_string( max_table_arity ) );
  }
  std::vector<Qudit> table( table_size( n ) );
  if ( form == Form::II )
  {
    for ( std::size_t row = 0; row < table.size(); ++row )
    {
      table[row] = Qudit{ std::popcount( row ) % 2 ? 3 : 0 };
    }
    return QFunction{ n, std::move( table ) };
  }

  if ( n == 2 )
  {
    /* rows A = 0..3, columns B = 0..3; no two rows or columns agree */
    return qf_from_values( 2, { 2, 1, 2, 1, 1, 2, 1, 2, 2, 1, 1, 2, 1, 2, 2, 1 } );
  }
  std::mt19937_64 gen( 0x9e3779b97f4a7c15ull + n );
  for ( auto& q : table )
  {
    q = Qudit{ 1 + static_cast<int>( gen() >> 63 ) };
  }
  return QFunction{ n, std::move( table ) };
}

BoundsReport measure( Netlist const& nl, BoundsReport bound )
{
  bound.n_actual = gate_count( nl );
  bound.d_actual = depth( nl );
  return bound;
}

} // namespace quat
