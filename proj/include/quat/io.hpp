#pragma once

#include <quat/function.hpp>
#include <quat/netlist.hpp>
#include <quat/sop.hpp>

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quat
{

/// Malformed text input; `line()` is 1-based (0 when the error is not tied to a line).
class parse_error : public std::runtime_error
{
public:
  parse_error( std::size_t line, std::string const& message );
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/* Truth tables:
 *   vars <n>
 *   <x1> ... <xn> <f>      (4^n rows in canonical order)
 */
std::string write_qtt( QFunction const& f );
QFunction read_qtt( std::string_view text );

/* SOP expressions:
 *   form 1|2
 *   vars <n>
 *   [minmax]
 *   [rewrite inward|outward X<i>]...
 *   term <w> <lit>...
 * with literals E(X<i>,<c>), X<i>, N(X<i>), S(X<i>), SN(X<i>), I(X<i>), O(X<i>).
 */
std::string write_qsop( SopExpr const& e );
SopExpr read_qsop( std::string_view text );

/* Netlists:
 *   quatnet 1
 *   fanin <v1> <v2>
 *   input <name> | const g<id> <c> | g<id> = <KIND> <operand>... | output <name> <operand>
 * Ids are dense and count inputs, so the k-th declaration has id k.
 */
std::string write_qnet( Netlist const& nl );
Netlist read_qnet( std::string_view text );

std::string read_text_file( std::filesystem::path const& path );
void write_text_file( std::filesystem::path const& path, std::string_view text );

} // namespace quat
