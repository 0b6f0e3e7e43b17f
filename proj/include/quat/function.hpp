#pragma once

#include <quat/qudit.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace quat
{

/// Assignment of one qudit per variable; element 0 is X1.
using InputVector = std::vector<Qudit>;

/// Largest arity for which a full truth table is materialized (4^12 rows).
inline constexpr unsigned max_table_arity = 12;

/// Canonical row of an input vector: sum of X_i * 4^(n-i), X1 most significant.
std::size_t row_index( std::span<const Qudit> x ) noexcept;

/// Inverse of row_index for a given arity.
InputVector row_vector( std::size_t row, unsigned arity );

std::string to_string( std::span<const Qudit> x );

inline std::size_t table_size( unsigned arity ) { return std::size_t{ 1 } << ( 2u * arity ); }

/// A completely specified n-variable quaternary function stored as a
/// 4^n-entry truth table in canonical row order.
class QFunction
{
public:
  QFunction( unsigned arity, std::vector<Qudit> outputs );

  unsigned arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return outputs_.size(); }
  std::span<const Qudit> outputs() const noexcept { return outputs_; }

  Qudit operator[]( std::size_t row ) const { return outputs_.at( row ); }

  /// Throws std::invalid_argument when the vector length differs from the arity.
  Qudit eval( std::span<const Qudit> x ) const;

  bool operator==( QFunction const& ) const = default;

private:
  unsigned arity_;
  std::vector<Qudit> outputs_;
};

/// Same as the QFunction constructor; length mismatches report expected and actual sizes.
QFunction qf_from_rows( unsigned arity, std::vector<Qudit> outputs );
QFunction qf_from_values( unsigned arity, std::vector<int> const& outputs );

Qudit qf_eval( QFunction const& f, std::span<const Qudit> x );

struct MintermPartition
{
  std::vector<InputVector> v1;
  std::vector<InputVector> v2;
  std::vector<InputVector> v3;
};

/// Input vectors grouped by output value 1, 2, 3; each group ascending by row.
MintermPartition partition_minterms( QFunction const& f );

/// Deterministic table drawn from std::mt19937_64 seeded with `seed`:
/// entry r is the top two bits of the r-th generator output.
QFunction qf_random( unsigned arity, std::uint64_t seed );

/// Raised when a tabulated evaluator fails; carries the offending input.
class evaluation_error : public std::runtime_error
{
public:
  evaluation_error( InputVector input, std::string const& what );
  InputVector const& input() const noexcept { return input_; }

private:
  InputVector input_;
};

using Evaluator = std::function<Qudit( InputVector const& )>;

/// Tabulates an evaluator over all 4^n inputs; the brute-force oracle.
QFunction qf_of_evaluator( unsigned arity, Evaluator const& eval );

/// First row where the two functions differ, or size() when equal.
std::size_t first_difference( QFunction const& a, QFunction const& b );

} // namespace quat
