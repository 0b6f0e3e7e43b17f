#pragma once

#include <quat/function.hpp>
#include <quat/minimize.hpp>
#include <quat/qudit.hpp>

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace quat
{

enum class Form : std::uint8_t
{
  I = 1,  ///< weighted equality min-terms
  II = 2  ///< two binary halves mapped back through bitswap/NOT literals
};

/// Literal shapes. `Eq` belongs to form-I, the four bit shapes to form-II;
/// `Inward` and `Outward` only appear after inverter rewriting.
enum class LiteralKind : std::uint8_t
{
  Eq,      ///< E(X, c)
  Plain,   ///< X
  Not,     ///< NOT X
  Swap,    ///< bitswap X
  SwapNot, ///< bitswap of NOT X
  Inward,  ///< inward inverter of X
  Outward  ///< outward inverter of X
};

struct Literal
{
  unsigned var = 1;  ///< 1-based variable index
  LiteralKind kind = LiteralKind::Plain;
  Qudit constant{}; ///< compared value for Eq literals, otherwise 0

  Qudit eval( std::span<const Qudit> x ) const;

  auto operator<=>( Literal const& ) const = default;
  bool operator==( Literal const& ) const = default;
};

struct Product
{
  std::vector<Literal> literals;
  Qudit weight{ 3 };

  bool operator==( Product const& ) const = default;
};

enum class RewriteKind : std::uint8_t
{
  Inward,
  Outward
};

/// Record of one inverter substitution applied to an expression.
struct Rewrite
{
  RewriteKind kind = RewriteKind::Inward;
  unsigned var = 1;

  bool operator==( Rewrite const& ) const = default;
};

struct SopExpr
{
  Form form = Form::I;
  unsigned arity = 1;
  std::vector<Product> products;
  std::vector<Rewrite> rewrites;
  bool minmax = false; ///< form-I only: products use MIN and the sum uses MAX

  bool operator==( SopExpr const& ) const = default;
};

/// Min-term of value d that is non-zero only at x == v; d must be 1, 2 or 3.
Product minterm_form1( InputVector const& v, Qudit d );

/// One weighted min-term per non-zero row, ascending by row.
SopExpr synthesize_form1( QFunction const& f );

/// Low-bit and high-bit binary halves of f over 2n packed input bits.
/// Variable i contributes bits 2(n-i)+1 (high) and 2(n-i) (low), so the
/// binary minterm index equals the quaternary row index.
std::pair<BinaryFunction, BinaryFunction> decompose_form2( QFunction const& f );

enum class Half : std::uint8_t
{
  Low,  ///< contributes weight 1
  High  ///< contributes weight 2
};

/// Maps binary cubes of one half to weighted quaternary products.
std::vector<Product> transform_literals( std::vector<Cube> const& cubes, Half half, unsigned arity );

/// Largest arity accepted by synthesize_form2 (12 binary variables).
inline constexpr unsigned max_form2_arity = max_exact_bits / 2;

SopExpr synthesize_form2( QFunction const& f );

/// Throws std::invalid_argument on arity mismatch.
Qudit eval_sop( SopExpr const& e, std::span<const Qudit> x );

/// Tabulates the expression over every input.
QFunction tabulate( SopExpr const& e );

/// Replaces groups of products that spell out an inward or outward
/// inverter over a shared co-factor by a single product using that
/// inverter. Preserves the truth table (checked exhaustively for small arity).
SopExpr peephole_inverters( SopExpr const& e );

/// Marks a form-I expression for MIN/MAX evaluation; rejects form-II.
SopExpr form1_use_minmax( SopExpr const& e );

/// Number of products; literal_count counts literals across all products.
std::size_t literal_count( SopExpr const& e );

/// Structural checks: variable indices, literal kinds per form, weights.
void validate( SopExpr const& e );

} // namespace quat
