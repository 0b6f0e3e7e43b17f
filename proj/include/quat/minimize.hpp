#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace quat
{

/// Largest binary arity accepted by the exact minimizer.
inline constexpr unsigned max_exact_bits = 12;

/// A completely specified binary function given by its on-set.
struct BinaryFunction
{
  unsigned bit_arity = 0;
  std::vector<std::uint32_t> ones; ///< sorted, unique, each < 2^bit_arity

  bool operator==( BinaryFunction const& ) const = default;
};

/// A product term over binary variables.
///
/// Bit p of `mask` is set when variable p appears; the matching bit of
/// `value` gives its polarity (1 = positive). The empty product
/// (mask 0) is the tautology.
struct Cube
{
  std::uint32_t mask = 0;
  std::uint32_t value = 0;

  constexpr bool covers( std::uint32_t minterm ) const noexcept { return ( minterm & mask ) == value; }
  constexpr unsigned literal_count() const noexcept { return static_cast<unsigned>( std::popcount( mask ) ); }

  constexpr auto operator<=>( Cube const& ) const noexcept = default;
};

/// Makes a BinaryFunction, sorting and deduplicating the on-set; throws
/// std::invalid_argument for out-of-range minterms.
BinaryFunction make_binary_function( unsigned bit_arity, std::vector<std::uint32_t> ones );

/// All prime implicants of `f`, sorted ascending.
std::vector<Cube> prime_implicants( BinaryFunction const& f );

/// Exact minimum-cardinality prime cover of `f`.
///
/// Ties on product count are broken by total literal count, then by the
/// lexicographically smallest sorted cube list. The constant-0 function
/// yields an empty cover and the constant-1 function the single empty cube.
/// Throws std::invalid_argument when bit_arity exceeds max_exact_bits.
std::vector<Cube> minimize_binary( BinaryFunction const& f );

/// True when every product implies `f` and the products cover all of its ones.
bool is_cover( BinaryFunction const& f, std::vector<Cube> const& cover );

} // namespace quat
