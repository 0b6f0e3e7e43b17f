#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace quat
{

/// A single quaternary digit in {0,1,2,3}.
///
/// The value is interpreted in packed-binary form as the bit pair
/// <high, low> with value 2*high + low. Construction from any other
/// integer throws std::invalid_argument.
class Qudit
{
public:
  constexpr Qudit() noexcept = default;

  constexpr explicit Qudit( int value ) : value_( checked( value ) ) {}

  static constexpr Qudit from_bits( bool high, bool low ) noexcept
  {
    Qudit q;
    q.value_ = static_cast<std::uint8_t>( ( high ? 2 : 0 ) | ( low ? 1 : 0 ) );
    return q;
  }

  constexpr int value() const noexcept { return value_; }
  constexpr bool high() const noexcept { return ( value_ >> 1 ) & 1; }
  constexpr bool low() const noexcept { return value_ & 1; }

  constexpr auto operator<=>( Qudit const& ) const noexcept = default;

private:
  static constexpr std::uint8_t checked( int value )
  {
    if ( value < 0 || value > 3 )
    {
      throw std::invalid_argument( "qudit value out of range: " + std::to_string( value ) );
    }
    return static_cast<std::uint8_t>( value );
  }

  std::uint8_t value_ = 0;
};

inline constexpr std::array<Qudit, 4> all_qudits = { Qudit{ 0 }, Qudit{ 1 }, Qudit{ 2 }, Qudit{ 3 } };

/// Operator tags of the quaternary algebra.
///
/// NOT, BITSWAP, INWARD and OUTWARD are unary; the rest are dyadic.
/// NAND, NOR and XNOR are NOT applied after AND, OR and XOR.
enum class Op : std::uint8_t
{
  And,
  Or,
  Not,
  Bitswap,
  Xor,
  Xnor,
  Eq,
  Inward,
  Outward,
  Min,
  Max,
  Nand,
  Nor
};

inline constexpr std::array<Op, 13> all_ops = { Op::And, Op::Or, Op::Not, Op::Bitswap, Op::Xor,
                                                Op::Xnor, Op::Eq, Op::Inward, Op::Outward, Op::Min,
                                                Op::Max, Op::Nand, Op::Nor };

constexpr bool is_unary( Op op ) noexcept
{
  return op == Op::Not || op == Op::Bitswap || op == Op::Inward || op == Op::Outward;
}

std::string_view op_name( Op op ) noexcept;
std::optional<Op> parse_op( std::string_view name ) noexcept;

constexpr Qudit pack( bool a1, bool a0 ) noexcept { return Qudit::from_bits( a1, a0 ); }
constexpr std::pair<bool, bool> unpack( Qudit q ) noexcept { return { q.high(), q.low() }; }

/// True for the absolute levels 0 and 3, whose bit pair is unchanged by a swap.
constexpr bool is_symmetric( Qudit q ) noexcept { return q.high() == q.low(); }

namespace detail
{

/* raw evaluation on values already known to be in range; used by the simulators */
constexpr std::uint8_t eval_unary( Op op, std::uint8_t a ) noexcept
{
  const std::uint8_t a1 = ( a >> 1 ) & 1;
  const std::uint8_t a0 = a & 1;
  switch ( op )
  {
  case Op::Not:
    return static_cast<std::uint8_t>( ~a & 3 );
  case Op::Bitswap:
    return static_cast<std::uint8_t>( ( a0 << 1 ) | a1 );
  case Op::Outward:
    return static_cast<std::uint8_t>( a1 ? 0 : 3 );
  case Op::Inward:
    return static_cast<std::uint8_t>( a1 ? 1 : 2 );
  default:
    return 0;
  }
}

constexpr std::uint8_t eval_dyadic( Op op, std::uint8_t a, std::uint8_t b ) noexcept
{
  switch ( op )
  {
  case Op::And:
    return a & b;
  case Op::Or:
    return a | b;
  case Op::Xor:
    return a ^ b;
  case Op::Xnor:
    return static_cast<std::uint8_t>( ~( a ^ b ) & 3 );
  case Op::Nand:
    return static_cast<std::uint8_t>( ~( a & b ) & 3 );
  case Op::Nor:
    return static_cast<std::uint8_t>( ~( a | b ) & 3 );
  case Op::Eq:
    return a == b ? 3 : 0;
  case Op::Min:
    return a < b ? a : b;
  case Op::Max:
    return a < b ? b : a;
  default:
    return 0;
  }
}

} // namespace detail

/// Applies a unary operator; throws std::invalid_argument for dyadic tags.
Qudit apply_unary( Op op, Qudit a );

/// Applies a dyadic operator; throws std::invalid_argument for unary tags.
Qudit apply_dyadic( Op op, Qudit a, Qudit b );

inline Qudit operator~( Qudit a ) { return apply_unary( Op::Bitswap, a ); }
inline Qudit operator&( Qudit a, Qudit b ) { return apply_dyadic( Op::And, a, b ); }
inline Qudit operator|( Qudit a, Qudit b ) { return apply_dyadic( Op::Or, a, b ); }
inline Qudit operator^( Qudit a, Qudit b ) { return apply_dyadic( Op::Xor, a, b ); }

inline Qudit q_not( Qudit a ) { return apply_unary( Op::Not, a ); }
inline Qudit q_inward( Qudit a ) { return apply_unary( Op::Inward, a ); }
inline Qudit q_outward( Qudit a ) { return apply_unary( Op::Outward, a ); }
inline Qudit q_eq( Qudit a, Qudit b ) { return apply_dyadic( Op::Eq, a, b ); }
inline Qudit q_min( Qudit a, Qudit b ) { return apply_dyadic( Op::Min, a, b ); }
inline Qudit q_max( Qudit a, Qudit b ) { return apply_dyadic( Op::Max, a, b ); }

/// Plain-text rendering of every operator's truth table, one operator per block.
std::string render_operator_tables();

} // namespace quat
