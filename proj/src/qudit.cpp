#include <quat/qudit.hpp>

#include <sstream>

namespace quat
{

namespace
{

struct op_entry
{
  Op op;
  std::string_view name;
};

constexpr std::array<op_entry, 13> op_names = { { { Op::And, "AND" },
                                                  { Op::Or, "OR" },
                                                  { Op::Not, "NOT" },
                                                  { Op::Bitswap, "BITSWAP" },
                                                  { Op::Xor, "XOR" },
                                                  { Op::Xnor, "XNOR" },
                                                  { Op::Eq, "EQ" },
                                                  { Op::Inward, "INWARD" },
                                                  { Op::Outward, "OUTWARD" },
                                                  { Op::Min, "MIN" },
                                                  { Op::Max, "MAX" },
                                                  { Op::Nand, "NAND" },
                                                  { Op::Nor, "NOR" } } };

} // namespace

std::string_view op_name( Op op ) noexcept
{
  for ( auto const& e : op_names )
  {
    if ( e.op == op )
    {
      return e.name;
    }
  }
  return "?";
}

std::optional<Op> parse_op( std::string_view name ) noexcept
{
  for ( auto const& e : op_names )
  {
    if ( e.name == name )
    {
      return e.op;
    }
  }
  return std::nullopt;
}

Qudit apply_unary( Op op, Qudit a )
{
  if ( !is_unary( op ) )
  {
    throw std::invalid_argument( "operator " + std::string( op_name( op ) ) + " is not unary" );
  }
  return Qudit{ detail::eval_unary( op, static_cast<std::uint8_t>( a.value() ) ) };
}

Qudit apply_dyadic( Op op, Qudit a, Qudit b )
{
  if ( is_unary( op ) )
  {
    throw std::invalid_argument( "operator " + std::string( op_name( op ) ) + " is not dyadic" );
  }
  return Qudit{ detail::eval_dyadic( op, static_cast<std::uint8_t>( a.value() ),
                                     static_cast<std::uint8_t>( b.value() ) ) };
}

std::string render_operator_tables()
{
  std::ostringstream os;
  os << "unary operators\n";
  os << "  A        " << " 0 1 2 3\n";
  for ( auto op : { Op::Not, Op::Outward, Op::Bitswap, Op::Inward } )
  {
    os << "  ";
    os.width( 9 );
    os << std::left << op_name( op ) << std::right;
    for ( auto a : all_qudits )
    {
      os << ' ' << apply_unary( op, a ).value();
    }
    os << '\n';
  }

  for ( auto op : { Op::And, Op::Or, Op::Xor, Op::Eq, Op::Min, Op::Max, Op::Xnor, Op::Nand, Op::Nor } )
  {
    os << '\n' << op_name( op ) << "\n  A\\B 0 1 2 3\n";
    for ( auto a : all_qudits )
    {
      os << "   " << a.value() << " ";
      for ( auto b : all_qudits )
      {
        os << ' ' << apply_dyadic( op, a, b ).value();
      }
      os << '\n';
    }
  }
  return os.str();
}

} // namespace quat
