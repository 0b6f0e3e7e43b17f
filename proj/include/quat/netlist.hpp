#pragma once

#include <quat/function.hpp>
#include <quat/qudit.hpp>
#include <quat/sop.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quat
{

using GateId = std::uint32_t;

enum class GateKind : std::uint8_t
{
  Input,
  Const,
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

std::string_view gate_kind_name( GateKind kind ) noexcept;
std::optional<GateKind> parse_gate_kind( std::string_view name ) noexcept;

/// True for AND, OR, MIN and MAX, whose fan-in is bounded by v1/v2 rather than fixed.
constexpr bool is_tree_kind( GateKind kind ) noexcept
{
  return kind == GateKind::And || kind == GateKind::Or || kind == GateKind::Min || kind == GateKind::Max;
}

struct Gate
{
  GateKind kind = GateKind::Const;
  std::vector<GateId> inputs;
  Qudit value{};    ///< CONST only
  std::string name; ///< INPUT only

  bool operator==( Gate const& ) const = default;
};

/// Directed acyclic gate graph in topological id order.
///
/// Every operand references a strictly smaller id. AND/MIN gates take at
/// most v1 operands and OR/MAX gates at most v2.
class Netlist
{
public:
  explicit Netlist( unsigned v1 = 2, unsigned v2 = 2 );

  unsigned v1() const noexcept { return v1_; }
  unsigned v2() const noexcept { return v2_; }

  GateId add_input( std::string name );
  GateId add_const( Qudit value );
  GateId add_gate( GateKind kind, std::vector<GateId> inputs );

  /// Outputs keep insertion order; names must be unique.
  void set_output( std::string name, GateId id );

  std::vector<Gate> const& gates() const noexcept { return gates_; }
  Gate const& gate( GateId id ) const { return gates_.at( id ); }
  std::vector<std::pair<std::string, GateId>> const& outputs() const noexcept { return outputs_; }
  std::vector<GateId> const& inputs() const noexcept { return inputs_; }

  /// Logic depth of a gate; sources are at level 0.
  std::size_t level( GateId id ) const { return levels_.at( id ); }

  std::optional<GateId> find_input( std::string_view name ) const;
  std::optional<GateId> find_output( std::string_view name ) const;

  bool operator==( Netlist const& ) const = default;

private:
  unsigned v1_;
  unsigned v2_;
  std::vector<Gate> gates_;
  std::vector<std::size_t> levels_;
  std::vector<GateId> inputs_;
  std::vector<std::pair<std::string, GateId>> outputs_;
};

/// Combines `leaves` with gates of `kind` (AND/OR/MIN/MAX) of fan-in at most v.
///
/// Adds exactly ceil((k-1)/(v-1)) gates and reaches depth ceil(log_v k)
/// above the deepest leaf for leaves of equal depth. A single leaf is
/// returned unchanged. Throws std::invalid_argument for an empty leaf list.
GateId build_tree( Netlist& nl, GateKind kind, std::span<const GateId> leaves, unsigned v );

struct LowerOptions
{
  bool expand_equality = false; ///< replace each EQ gate by its outward-inverter realization
  bool use_minmax = false;      ///< form-I only: MIN/MAX in place of AND/OR
};

/// Lowers an SOP expression to a netlist with inputs X1..Xn and output F.
Netlist lower_sop( SopExpr const& e, unsigned v1, unsigned v2, LowerOptions options = {} );

using Bindings = std::map<std::string, Qudit, std::less<>>;

/// Evaluates every output; throws std::invalid_argument naming an unbound input.
std::vector<std::pair<std::string, Qudit>> simulate( Netlist const& nl, Bindings const& bindings );

/// Evaluates all outputs with inputs given in declaration order.
std::vector<Qudit> simulate_ordered( Netlist const& nl, std::span<const Qudit> inputs );

/// Truth table of one output with the inputs taken as variables in declaration order.
QFunction tabulate( Netlist const& nl, std::string_view output );

/// Logic gates only; INPUT and CONST are not counted.
std::size_t gate_count( Netlist const& nl );
std::size_t count_kind( Netlist const& nl, GateKind kind );

/// Longest logic-gate path to any output; INPUT and CONST sit at depth 0.
std::size_t depth( Netlist const& nl );

struct BoundsReport
{
  std::uint64_t n_bound = 0;
  std::uint64_t d_bound = 0;
  std::optional<std::uint64_t> n_actual;
  std::optional<std::uint64_t> d_actual;

  bool within() const
  {
    return ( !n_actual || *n_actual <= n_bound ) && ( !d_actual || *d_actual <= d_bound );
  }
};

/// Largest arity accepted by the bound calculators.
inline constexpr unsigned max_bound_arity = 24;

std::uint64_t ceil_div( std::uint64_t a, std::uint64_t b );
/// Smallest d with v^d >= x (0 for x <= 1).
std::uint64_t ceil_log( std::uint64_t x, std::uint64_t v );

/// Worst-case gate count and depth for a form-II SOP of n variables.
/// Literal cost is 3n gates at depth 2.
BoundsReport bound_form2( unsigned n, unsigned v1, unsigned v2 );

/// Worst-case gate count and depth for a form-I SOP of n variables whose
/// equality literals cost n0 gates over d0 levels each.
BoundsReport bound_form1( unsigned n, unsigned v1, unsigned v2, unsigned n0 = 1, unsigned d0 = 1 );

/// Functions that reach the worst case of each form: for form-II both
/// binary halves are the parity checkerboard; for form-I every entry is
/// 1 or 2 (the fixed 4x4 table for n = 2, seeded otherwise).
QFunction worst_case_function( unsigned n, Form form );

/// Pairs a bound with the measured count and depth of `nl`.
BoundsReport measure( Netlist const& nl, BoundsReport bound );

} // namespace quat
