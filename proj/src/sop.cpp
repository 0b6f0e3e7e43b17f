#include <quat/sop.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace quat
{

namespace
{

/* exhaustive self-check of rewrites is skipped past this arity */
constexpr unsigned peephole_check_arity = 8;

std::uint8_t eval_raw( Literal const& l, std::span<const Qudit> x )
{
  const auto a = static_cast<std::uint8_t>( x[l.var - 1].value() );
  switch ( l.kind )
  {
  case LiteralKind::Eq:
    return detail::eval_dyadic( Op::Eq, a, static_cast<std::uint8_t>( l.constant.value() ) );
  case LiteralKind::Plain:
    return a;
  case LiteralKind::Not:
    return detail::eval_unary( Op::Not, a );
  case LiteralKind::Swap:
    return detail::eval_unary( Op::Bitswap, a );
  case LiteralKind::SwapNot:
    return detail::eval_unary( Op::Bitswap, detail::eval_unary( Op::Not, a ) );
  case LiteralKind::Inward:
    return detail::eval_unary( Op::Inward, a );
  case LiteralKind::Outward:
    return detail::eval_unary( Op::Outward, a );
  }
  return 0;
}

std::uint8_t eval_product( Product const& p, std::span<const Qudit> x, Op conj )
{
  auto acc = static_cast<std::uint8_t>( p.weight.value() );
  for ( auto const& l : p.literals )
  {
    acc = detail::eval_dyadic( conj, acc, eval_raw( l, x ) );
  }
  return acc;
}

void sort_literals( Product& p ) { std::sort( p.literals.begin(), p.literals.end() ); }

Product with_literal( std::vector<Literal> cofactor, Literal extra )
{
  Product p;
  p.literals = std::move( cofactor );
  p.literals.push_back( extra );
  sort_literals( p );
  p.weight = Qudit{ 3 };
  return p;
}

std::vector<Literal> without( std::vector<Literal> const& lits, std::size_t skip )
{
  std::vector<Literal> out;
  out.reserve( lits.size() - 1 );
  for ( std::size_t i = 0; i < lits.size(); ++i )
  {
    if ( i != skip )
    {
      out.push_back( lits[i] );
    }
  }
  return out;
}

using CofactorKey = std::pair<unsigned, std::vector<Literal>>;

/* replaces `consumed` products by `replacement`, which takes the slot of the first one */
void splice( std::vector<Product>& products, std::vector<std::size_t> consumed, Product replacement,
             std::vector<char>& used )
{
  std::sort( consumed.begin(), consumed.end() );
  products[consumed.front()] = std::move( replacement );
  for ( auto idx : consumed )
  {
    used[idx] = 1;
  }
  used[consumed.front()] = 2;
}

void compact( std::vector<Product>& products, std::vector<char> const& used )
{
  std::vector<Product> kept;
  kept.reserve( products.size() );
  for ( std::size_t i = 0; i < products.size(); ++i )
  {
    if ( used[i] != 1 )
    {
      kept.push_back( std::move( products[i] ) );
    }
  }
  products = std::move( kept );
}

/* one pass of the equality-literal patterns; returns true when something changed */
bool peephole_form1_pass( SopExpr& e )
{
  /* slots[c] holds products whose literal on the key variable is E(X, c) */
  std::map<CofactorKey, std::array<std::vector<std::size_t>, 4>> groups;
  for ( std::size_t i = 0; i < e.products.size(); ++i )
  {
    auto const& lits = e.products[i].literals;
    for ( std::size_t k = 0; k < lits.size(); ++k )
    {
      if ( lits[k].kind == LiteralKind::Eq )
      {
        groups[{ lits[k].var, without( lits, k ) }][lits[k].constant.value()].push_back( i );
      }
    }
  }

  std::vector<char> used( e.products.size(), 0 );
  bool changed = false;
  auto take = [&]( std::vector<std::size_t> const& slot, int weight ) -> std::optional<std::size_t> {
    for ( auto idx : slot )
    {
      if ( !used[idx] && e.products[idx].weight.value() == weight )
      {
        return idx;
      }
    }
    return std::nullopt;
  };

  for ( auto const& [key, slots] : groups )
  {
    for ( ;; )
    {
      /* (X^0 + X^1).2 + (X^2 + X^3).1 over a shared co-factor is the inward inverter */
      auto z = take( slots[0], 2 );
      auto o = take( slots[1], 2 );
      auto t = take( slots[2], 1 );
      auto h = take( slots[3], 1 );
      if ( z && o && t && h )
      {
        splice( e.products, { *z, *o, *t, *h },
                with_literal( key.second, Literal{ key.first, LiteralKind::Inward, Qudit{} } ), used );
        e.rewrites.push_back( Rewrite{ RewriteKind::Inward, key.first } );
        changed = true;
        continue;
      }
      /* X^0.3 + X^1.3 is the outward inverter */
      z = take( slots[0], 3 );
      o = take( slots[1], 3 );
      if ( z && o )
      {
        splice( e.products, { *z, *o },
                with_literal( key.second, Literal{ key.first, LiteralKind::Outward, Qudit{} } ), used );
        e.rewrites.push_back( Rewrite{ RewriteKind::Outward, key.first } );
        changed = true;
        continue;
      }
      break;
    }
  }
  compact( e.products, used );
  return changed;
}

bool peephole_form2_pass( SopExpr& e )
{
  struct Slots
  {
    std::vector<std::size_t> not_high;    ///< NOT X, weight 2
    std::vector<std::size_t> swap_low;    ///< bitswap X, weight 1
    std::vector<std::size_t> swapnot_low; ///< bitswap NOT X, weight 1
  };
  std::map<CofactorKey, Slots> groups;
  for ( std::size_t i = 0; i < e.products.size(); ++i )
  {
    auto const& p = e.products[i];
    for ( std::size_t k = 0; k < p.literals.size(); ++k )
    {
      auto const& l = p.literals[k];
      if ( p.weight.value() == 2 && l.kind == LiteralKind::Not )
      {
        groups[{ l.var, without( p.literals, k ) }].not_high.push_back( i );
      }
      else if ( p.weight.value() == 1 && l.kind == LiteralKind::Swap )
      {
        groups[{ l.var, without( p.literals, k ) }].swap_low.push_back( i );
      }
      else if ( p.weight.value() == 1 && l.kind == LiteralKind::SwapNot )
      {
        groups[{ l.var, without( p.literals, k ) }].swapnot_low.push_back( i );
      }
    }
  }

  std::vector<char> used( e.products.size(), 0 );
  bool changed = false;
  auto take = [&]( std::vector<std::size_t> const& slot ) -> std::optional<std::size_t> {
    for ( auto idx : slot )
    {
      if ( !used[idx] )
      {
        return idx;
      }
    }
    return std::nullopt;
  };

  for ( auto const& [key, slots] : groups )
  {
    for ( ;; )
    {
      auto high = take( slots.not_high );
      if ( !high )
      {
        break;
      }
      /* NOT X.2 + ~X.1 is the inward inverter, NOT X.2 + ~NOT X.1 the outward one */
      if ( auto low = take( slots.swap_low ) )
      {
        splice( e.products, { *high, *low },
                with_literal( key.second, Literal{ key.first, LiteralKind::Inward, Qudit{} } ), used );
        e.rewrites.push_back( Rewrite{ RewriteKind::Inward, key.first } );
        changed = true;
        continue;
      }
      if ( auto low = take( slots.swapnot_low ) )
      {
        splice( e.products, { *high, *low },
                with_literal( key.second, Literal{ key.first, LiteralKind::Outward, Qudit{} } ), used );
        e.rewrites.push_back( Rewrite{ RewriteKind::Outward, key.first } );
        changed = true;
        continue;
      }
      break;
    }
  }
  compact( e.products, used );
  return changed;
}

} // namespace

Qudit Literal::eval( std::span<const Qudit> x ) const
{
  if ( var < 1 || var > x.size() )
  {
    throw std::invalid_argument( "literal variable X" + std::to_string( var ) + " outside input of length " +
                                 std::to_string( x.size() ) );
  }
  return Qudit{ eval_raw( *this, x ) };
}

Product minterm_form1( InputVector const& v, Qudit d )
{
  if ( d.value() == 0 )
  {
    throw std::invalid_argument( "min-term weight must be 1, 2 or 3" );
  }
  Product p;
  p.weight = d;
  for ( std::size_t i = 0; i < v.size(); ++i )
  {
    p.literals.push_back( Literal{ static_cast<unsigned>( i + 1 ), LiteralKind::Eq, v[i] } );
  }
  return p;
}

SopExpr synthesize_form1( QFunction const& f )
{
  SopExpr e;
  e.form = Form::I;
  e.arity = f.arity();
  for ( std::size_t row = 0; row < f.size(); ++row )
  {
    if ( f[row].value() != 0 )
    {
      e.products.push_back( minterm_form1( row_vector( row, f.arity() ), f[row] ) );
    }
  }
  return e;
}

std::pair<BinaryFunction, BinaryFunction> decompose_form2( QFunction const& f )
{
  std::vector<std::uint32_t> low;
  std::vector<std::uint32_t> high;
  for ( std::size_t row = 0; row < f.size(); ++row )
  {
    if ( f[row].low() )
    {
      low.push_back( static_cast<std::uint32_t>( row ) );
    }
    if ( f[row].high() )
    {
      high.push_back( static_cast<std::uint32_t>( row ) );
    }
  }
  const unsigned bits = 2 * f.arity();
  return { BinaryFunction{ bits, std::move( low ) }, BinaryFunction{ bits, std::move( high ) } };
}

std::vector<Product> transform_literals( std::vector<Cube> const& cubes, Half half, unsigned arity )
{
  std::vector<Product> out;
  out.reserve( cubes.size() );
  for ( auto const& c : cubes )
  {
    Product p;
    p.weight = Qudit{ half == Half::Low ? 1 : 2 };
    for ( auto bits = c.mask; bits; bits &= bits - 1 )
    {
      const auto pos = static_cast<unsigned>( std::countr_zero( bits ) );
      if ( pos >= 2 * arity )
      {
        throw std::invalid_argument( "cube references bit " + std::to_string( pos ) + " beyond arity " +
                                     std::to_string( arity ) );
      }
      const unsigned var = arity - pos / 2;
      const bool high_bit = pos % 2 == 1;
      const bool positive = ( c.value >> pos ) & 1;

      LiteralKind kind;
      if ( high_bit == ( half == Half::High ) )
      {
        kind = positive ? LiteralKind::Plain : LiteralKind::Not;
      }
      else
      {
        kind = positive ? LiteralKind::Swap : LiteralKind::SwapNot;
      }
      p.literals.push_back( Literal{ var, kind, Qudit{} } );
    }
    sort_literals( p );
    out.push_back( std::move( p ) );
  }
  return out;
}

SopExpr synthesize_form2( QFunction const& f )
{
  if ( f.arity() > max_form2_arity )
  {
    throw std::invalid_argument( "form-II synthesis supports arity up to " + std::to_string( max_form2_arity ) +
                                 ", got " + std::to_string( f.arity() ) );
  }
  auto [low, high] = decompose_form2( f );

  SopExpr e;
  e.form = Form::II;
  e.arity = f.arity();
  e.products = transform_literals( minimize_binary( low ), Half::Low, f.arity() );
  auto upper = transform_literals( minimize_binary( high ), Half::High, f.arity() );
  e.products.insert( e.products.end(), std::make_move_iterator( upper.begin() ),
                     std::make_move_iterator( upper.end() ) );
  return e;
}

Qudit eval_sop( SopExpr const& e, std::span<const Qudit> x )
{
  if ( x.size() != e.arity )
  {
    throw std::invalid_argument( "input vector has " + std::to_string( x.size() ) + " values, expression arity is " +
                                 std::to_string( e.arity ) );
  }
  const Op conj = e.minmax ? Op::Min : Op::And;
  const Op disj = e.minmax ? Op::Max : Op::Or;
  std::uint8_t acc = 0;
  for ( auto const& p : e.products )
  {
    acc = detail::eval_dyadic( disj, acc, eval_product( p, x, conj ) );
  }
  return Qudit{ acc };
}

QFunction tabulate( SopExpr const& e )
{
  return qf_of_evaluator( e.arity, [&e]( InputVector const& x ) { return eval_sop( e, x ); } );
}

SopExpr peephole_inverters( SopExpr const& e )
{
  SopExpr out = e;
  if ( out.form == Form::I )
  {
    while ( peephole_form1_pass( out ) )
    {
    }
  }
  else
  {
    while ( peephole_form2_pass( out ) )
    {
    }
  }

  if ( out.rewrites.size() != e.rewrites.size() && e.arity <= peephole_check_arity )
  {
    if ( tabulate( out ) != tabulate( e ) )
    {
      throw std::logic_error( "inverter rewrite changed the truth table" );
    }
  }
  return out;
}

SopExpr form1_use_minmax( SopExpr const& e )
{
  if ( e.form != Form::I )
  {
    throw std::invalid_argument( "MIN/MAX substitution is only valid for form-I expressions" );
  }
  SopExpr out = e;
  out.minmax = true;
  return out;
}

std::size_t literal_count( SopExpr const& e )
{
  std::size_t n = 0;
  for ( auto const& p : e.products )
  {
    n += p.literals.size();
  }
  return n;
}

void validate( SopExpr const& e )
{
  if ( e.arity < 1 )
  {
    throw std::invalid_argument( "expression arity must be at least 1" );
  }
  if ( e.minmax && e.form != Form::I )
  {
    throw std::invalid_argument( "MIN/MAX marking is only valid for form-I expressions" );
  }
  for ( auto const& p : e.products )
  {
    if ( p.weight.value() == 0 )
    {
      throw std::invalid_argument( "product with zero weight" );
    }
    for ( auto const& l : p.literals )
    {
      if ( l.var < 1 || l.var > e.arity )
      {
        throw std::invalid_argument( "literal variable X" + std::to_string( l.var ) + " outside arity " +
                                     std::to_string( e.arity ) );
      }
      const bool generic = l.kind == LiteralKind::Inward || l.kind == LiteralKind::Outward;
      const bool ok = generic || ( e.form == Form::I ? l.kind == LiteralKind::Eq : l.kind != LiteralKind::Eq );
      if ( !ok )
      {
        throw std::invalid_argument( "literal kind not allowed in form-" + std::string( e.form == Form::I ? "I" : "II" ) );
      }
      if ( l.kind != LiteralKind::Eq && l.constant.value() != 0 )
      {
        throw std::invalid_argument( "only equality literals carry a constant" );
      }
    }
  }
}

} // namespace quat
