#pragma once

#include <quat/netlist.hpp>
#include <quat/sop.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace quat
{

/// Two-input realizations of the equality operator E(A, B).
enum class EqualityVariant : std::uint8_t
{
  SumOfProducts, ///< four products over A, NOT A, bitswap A, bitswap NOT A (and B)
  XnorSwap,      ///< XNOR(A,B) AND bitswap(XNOR(A,B))
  Nor,           ///< NOR(A xor B, bitswap(A xor B))
  OutwardAnd,    ///< !(A xor B) AND !(bitswap(A xor B))
  OutwardOr      ///< !((A xor B) OR bitswap(A xor B))
};

inline constexpr std::array<EqualityVariant, 5> all_equality_variants = {
    EqualityVariant::SumOfProducts, EqualityVariant::XnorSwap, EqualityVariant::Nor, EqualityVariant::OutwardAnd,
    EqualityVariant::OutwardOr };

enum class CircuitKind : std::uint8_t
{
  EqualitySop,
  EqualityXnor,
  EqualityNor,
  EqualityOutwardAnd,
  EqualityOutwardOr,
  EqZero,
  EqThree,
  BitswapFromEq,
  Decoder,
  Demux,
  Mux,
  MinRef,
  MaxRef
};

struct CircuitSpec
{
  CircuitKind kind = CircuitKind::Decoder;
  unsigned n = 1; ///< selector count for decoder, demux and mux
};

std::string_view circuit_name( CircuitKind kind ) noexcept;
std::optional<CircuitKind> parse_circuit_kind( std::string_view name ) noexcept;

/// Inputs A, B; output E.
Netlist equality_netlist( EqualityVariant variant, unsigned v1 = 2, unsigned v2 = 2 );

/// E(A, c) with input A and output E. The constants 0 and 3 use the
/// two-gate bitswap forms; 1 and 2 compare against a constant.
Netlist unary_equality( Qudit c );

/// Bitswap of input A built from equality, AND, OR and constants only; output Y.
Netlist bitswap_from_equality();

struct DecoderOptions
{
  bool use_min = false;         ///< MIN gates in place of the output ANDs
  bool expand_equality = false; ///< realize each E(S, c) from bitswap, NOR, XNOR and AND gates
};

/// n-to-4^n decoder. Selector inputs are S for n = 1 and S1..Sn otherwise;
/// outputs L0..L(4^n-1) in canonical order. Output j is 3 exactly when the
/// selectors spell the base-4 digits of j.
Netlist decoder( unsigned n, unsigned v1 = 2, DecoderOptions options = {} );

/// Decoder whose outputs are additionally AND-ed with data input D.
Netlist demux( unsigned n, unsigned v1 = 2 );

/// Data inputs D0..D(4^n-1) then selectors; output M = D[selected].
Netlist mux( unsigned n, unsigned v1 = 2, unsigned v2 = 2 );

/// The hand-derived form-II MIN (Op::Min) or MAX (Op::Max) expression over A = X1, B = X2.
SopExpr minmax_reference( Op which );

/// Builds any named circuit; MIN/MAX references are lowered as form-II SOPs.
Netlist build_circuit( CircuitSpec const& spec, unsigned v1 = 2, unsigned v2 = 2 );

/// Gate tally by kind name, plus "AND(x,~x)" for AND gates whose operands
/// are a signal and its bitswap.
std::map<std::string, std::size_t> gate_tally( Netlist const& nl );

} // namespace quat
