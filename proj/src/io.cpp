#include <quat/io.hpp>

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace quat
{

parse_error::parse_error( std::size_t line, std::string const& message )
    : std::runtime_error( line == 0 ? message : "line " + std::to_string( line ) + ": " + message ), line_( line )
{
}

namespace
{

struct Line
{
  std::size_t number;
  std::string_view text;
};

/// Non-comment, non-blank lines with their 1-based numbers.
std::vector<Line> content_lines( std::string_view text, bool require_final_newline )
{
  if ( require_final_newline && ( text.empty() || text.back() != '\n' ) )
  {
    throw parse_error( 0, "missing trailing newline" );
  }
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while ( pos < text.size() )
  {
    auto end = text.find( '\n', pos );
    if ( end == std::string_view::npos )
    {
      end = text.size();
    }
    ++number;
    const auto line = text.substr( pos, end - pos );
    pos = end + 1;
    if ( line.empty() || line.front() == '#' )
    {
      continue;
    }
    if ( line.find( '\r' ) != std::string_view::npos )
    {
      throw parse_error( number, "carriage return in line" );
    }
    lines.push_back( { number, line } );
  }
  return lines;
}

/// Exactly single-space separated tokens.
std::vector<std::string_view> split_strict( Line const& line )
{
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  const auto text = line.text;
  while ( true )
  {
    const auto end = text.find( ' ', pos );
    const auto token = text.substr( pos, end == std::string_view::npos ? std::string_view::npos : end - pos );
    if ( token.empty() )
    {
      throw parse_error( line.number, "fields must be separated by single spaces" );
    }
    tokens.push_back( token );
    if ( end == std::string_view::npos )
    {
      return tokens;
    }
    pos = end + 1;
  }
}

std::vector<std::string_view> split_ws( Line const& line )
{
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  const auto text = line.text;
  while ( pos < text.size() )
  {
    while ( pos < text.size() && ( text[pos] == ' ' || text[pos] == '\t' ) )
    {
      ++pos;
    }
    auto end = pos;
    while ( end < text.size() && text[end] != ' ' && text[end] != '\t' )
    {
      ++end;
    }
    if ( end > pos )
    {
      tokens.push_back( text.substr( pos, end - pos ) );
    }
    pos = end;
  }
  return tokens;
}

template<typename T>
std::optional<T> to_number( std::string_view s )
{
  T value{};
  const auto [ptr, ec] = std::from_chars( s.data(), s.data() + s.size(), value );
  if ( ec != std::errc{} || ptr != s.data() + s.size() )
  {
    return std::nullopt;
  }
  return value;
}

unsigned parse_unsigned( std::string_view s, std::size_t line, std::string_view what )
{
  const auto v = to_number<unsigned>( s );
  if ( !v )
  {
    throw parse_error( line, "expected " + std::string( what ) + ", got '" + std::string( s ) + "'" );
  }
  return *v;
}

Qudit parse_qudit( std::string_view s, std::size_t line )
{
  if ( s.size() != 1 || s[0] < '0' || s[0] > '3' )
  {
    throw parse_error( line, "expected a digit 0-3, got '" + std::string( s ) + "'" );
  }
  return Qudit{ s[0] - '0' };
}

unsigned parse_vars( std::vector<Line> const& lines, std::size_t index, unsigned max_arity )
{
  if ( lines.size() <= index )
  {
    throw parse_error( 0, "missing 'vars' line" );
  }
  const auto tokens = split_ws( lines[index] );
  if ( tokens.size() != 2 || tokens[0] != "vars" )
  {
    throw parse_error( lines[index].number, "expected 'vars <n>'" );
  }
  const auto n = parse_unsigned( tokens[1], lines[index].number, "variable count" );
  if ( n < 1 || n > max_arity )
  {
    throw parse_error( lines[index].number,
                       "variable count must be in 1.." + std::to_string( max_arity ) + ", got " + std::to_string( n ) );
  }
  return n;
}

/* ---- .qsop literals ---- */

struct literal_syntax
{
  LiteralKind kind;
  std::string_view prefix;
};

constexpr std::array<literal_syntax, 5> wrapped_literals = { { { LiteralKind::Not, "N" },
                                                               { LiteralKind::Swap, "S" },
                                                               { LiteralKind::SwapNot, "SN" },
                                                               { LiteralKind::Inward, "I" },
                                                               { LiteralKind::Outward, "O" } } };

std::string variable_name( unsigned var ) { return "X" + std::to_string( var ); }

std::string literal_text( Literal const& l )
{
  if ( l.kind == LiteralKind::Eq )
  {
    return "E(" + variable_name( l.var ) + "," + std::to_string( l.constant.value() ) + ")";
  }
  if ( l.kind == LiteralKind::Plain )
  {
    return variable_name( l.var );
  }
  for ( auto const& w : wrapped_literals )
  {
    if ( w.kind == l.kind )
    {
      return std::string( w.prefix ) + "(" + variable_name( l.var ) + ")";
    }
  }
  return "?";
}

unsigned parse_variable( std::string_view s, unsigned arity, std::size_t line )
{
  if ( s.size() < 2 || s[0] != 'X' )
  {
    throw parse_error( line, "expected a variable X<i>, got '" + std::string( s ) + "'" );
  }
  const auto var = to_number<unsigned>( s.substr( 1 ) );
  if ( !var || *var < 1 || *var > arity )
  {
    throw parse_error( line, "variable '" + std::string( s ) + "' is outside X1..X" + std::to_string( arity ) );
  }
  return *var;
}

Literal parse_literal( std::string_view s, unsigned arity, std::size_t line )
{
  const auto open = s.find( '(' );
  if ( open == std::string_view::npos )
  {
    return Literal{ parse_variable( s, arity, line ), LiteralKind::Plain, Qudit{} };
  }
  if ( s.back() != ')' )
  {
    throw parse_error( line, "unterminated literal '" + std::string( s ) + "'" );
  }
  const auto head = s.substr( 0, open );
  const auto body = s.substr( open + 1, s.size() - open - 2 );
  if ( head == "E" )
  {
    const auto comma = body.find( ',' );
    if ( comma == std::string_view::npos )
    {
      throw parse_error( line, "expected E(X<i>,<c>), got '" + std::string( s ) + "'" );
    }
    return Literal{ parse_variable( body.substr( 0, comma ), arity, line ), LiteralKind::Eq,
                    parse_qudit( body.substr( comma + 1 ), line ) };
  }
  for ( auto const& w : wrapped_literals )
  {
    if ( w.prefix == head )
    {
      return Literal{ parse_variable( body, arity, line ), w.kind, Qudit{} };
    }
  }
  throw parse_error( line, "unknown literal '" + std::string( s ) + "'" );
}

bool is_gate_ref( std::string_view s ) { return s.size() > 1 && s[0] == 'g' && to_number<GateId>( s.substr( 1 ) ); }

bool is_identifier( std::string_view s )
{
  if ( s.empty() || !( std::isalpha( static_cast<unsigned char>( s[0] ) ) || s[0] == '_' ) )
  {
    return false;
  }
  for ( const char c : s )
  {
    if ( !( std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' ) )
    {
      return false;
    }
  }
  return true;
}

} // namespace

/* ---- .qtt ---- */

std::string write_qtt( QFunction const& f )
{
  std::string out = "vars " + std::to_string( f.arity() ) + "\n";
  for ( std::size_t row = 0; row < f.size(); ++row )
  {
    for ( auto const& x : row_vector( row, f.arity() ) )
    {
      out += static_cast<char>( '0' + x.value() );
      out += ' ';
    }
    out += static_cast<char>( '0' + f[row].value() );
    out += '\n';
  }
  return out;
}

QFunction read_qtt( std::string_view text )
{
  const auto lines = content_lines( text, true );
  if ( lines.empty() )
  {
    throw parse_error( 0, "empty truth table" );
  }
  const auto header = split_strict( lines[0] );
  if ( header.size() != 2 || header[0] != "vars" )
  {
    throw parse_error( lines[0].number, "expected 'vars <n>'" );
  }
  const auto n = parse_vars( lines, 0, max_table_arity );
  const auto rows = table_size( n );
  if ( lines.size() - 1 != rows )
  {
    throw parse_error( lines.size() > rows + 1 ? lines[rows + 1].number : 0,
                       "expected " + std::to_string( rows ) + " data rows, got " + std::to_string( lines.size() - 1 ) );
  }
  std::vector<Qudit> outputs;
  outputs.reserve( rows );
  for ( std::size_t row = 0; row < rows; ++row )
  {
    auto const& line = lines[row + 1];
    const auto tokens = split_strict( line );
    if ( tokens.size() != n + 1 )
    {
      throw parse_error( line.number, "expected " + std::to_string( n + 1 ) + " fields, got " +
                                          std::to_string( tokens.size() ) );
    }
    const auto expected = row_vector( row, n );
    for ( unsigned i = 0; i < n; ++i )
    {
      if ( parse_qudit( tokens[i], line.number ) != expected[i] )
      {
        throw parse_error( line.number, "rows must be in canonical order; expected inputs " + to_string( expected ) );
      }
    }
    outputs.push_back( parse_qudit( tokens[n], line.number ) );
  }
  return QFunction( n, std::move( outputs ) );
}

/* ---- .qsop ---- */

std::string write_qsop( SopExpr const& e )
{
  std::ostringstream os;
  os << "form " << static_cast<int>( e.form ) << "\n";
  os << "vars " << e.arity << "\n";
  if ( e.minmax )
  {
    os << "minmax\n";
  }
  for ( auto const& r : e.rewrites )
  {
    os << "rewrite " << ( r.kind == RewriteKind::Inward ? "inward" : "outward" ) << " " << variable_name( r.var )
       << "\n";
  }
  for ( auto const& p : e.products )
  {
    os << "term " << p.weight.value();
    for ( auto const& l : p.literals )
    {
      os << " " << literal_text( l );
    }
    os << "\n";
  }
  return os.str();
}

SopExpr read_qsop( std::string_view text )
{
  const auto lines = content_lines( text, false );
  if ( lines.empty() )
  {
    throw parse_error( 0, "empty SOP file" );
  }
  SopExpr e;
  const auto head = split_ws( lines[0] );
  if ( head.size() != 2 || head[0] != "form" || ( head[1] != "1" && head[1] != "2" ) )
  {
    throw parse_error( lines[0].number, "expected 'form 1' or 'form 2'" );
  }
  e.form = head[1] == "1" ? Form::I : Form::II;
  e.arity = parse_vars( lines, 1, max_table_arity );

  bool seen_term = false;
  for ( std::size_t k = 2; k < lines.size(); ++k )
  {
    const auto number = lines[k].number;
    const auto tokens = split_ws( lines[k] );
    if ( tokens[0] == "minmax" && tokens.size() == 1 && !seen_term )
    {
      e.minmax = true;
    }
    else if ( tokens[0] == "rewrite" && !seen_term )
    {
      if ( tokens.size() != 3 || ( tokens[1] != "inward" && tokens[1] != "outward" ) )
      {
        throw parse_error( number, "expected 'rewrite inward|outward X<i>'" );
      }
      e.rewrites.push_back( Rewrite{ tokens[1] == "inward" ? RewriteKind::Inward : RewriteKind::Outward,
                                     parse_variable( tokens[2], e.arity, number ) } );
    }
    else if ( tokens[0] == "term" )
    {
      seen_term = true;
      if ( tokens.size() < 2 )
      {
        throw parse_error( number, "term needs a weight" );
      }
      Product p;
      p.weight = parse_qudit( tokens[1], number );
      if ( p.weight.value() == 0 )
      {
        throw parse_error( number, "term weight must be 1, 2 or 3" );
      }
      for ( std::size_t t = 2; t < tokens.size(); ++t )
      {
        p.literals.push_back( parse_literal( tokens[t], e.arity, number ) );
      }
      e.products.push_back( std::move( p ) );
    }
    else
    {
      throw parse_error( number, "unexpected '" + std::string( lines[k].text ) + "'" );
    }
  }
  try
  {
    validate( e );
  }
  catch ( std::invalid_argument const& ex )
  {
    throw parse_error( 0, ex.what() );
  }
  return e;
}

/* ---- .qnet ---- */

std::string write_qnet( Netlist const& nl )
{
  std::ostringstream os;
  os << "quatnet 1\n";
  os << "fanin " << nl.v1() << " " << nl.v2() << "\n";
  auto const& gates = nl.gates();
  auto operand = [&gates]( GateId id ) {
    return gates[id].kind == GateKind::Input ? gates[id].name : "g" + std::to_string( id );
  };
  for ( GateId id = 0; id < gates.size(); ++id )
  {
    auto const& g = gates[id];
    switch ( g.kind )
    {
    case GateKind::Input:
      os << "input " << g.name << "\n";
      break;
    case GateKind::Const:
      os << "const g" << id << " " << g.value.value() << "\n";
      break;
    default:
      os << "g" << id << " = " << gate_kind_name( g.kind );
      for ( const auto in : g.inputs )
      {
        os << " " << operand( in );
      }
      os << "\n";
      break;
    }
  }
  for ( auto const& [name, id] : nl.outputs() )
  {
    os << "output " << name << " " << operand( id ) << "\n";
  }
  return os.str();
}

Netlist read_qnet( std::string_view text )
{
  const auto lines = content_lines( text, false );
  if ( lines.empty() || split_ws( lines[0] ) != std::vector<std::string_view>{ "quatnet", "1" } )
  {
    throw parse_error( lines.empty() ? 0 : lines[0].number, "expected 'quatnet 1'" );
  }
  if ( lines.size() < 2 )
  {
    throw parse_error( 0, "missing 'fanin <v1> <v2>' line" );
  }
  const auto fanin = split_ws( lines[1] );
  if ( fanin.size() != 3 || fanin[0] != "fanin" )
  {
    throw parse_error( lines[1].number, "expected 'fanin <v1> <v2>'" );
  }
  const auto v1 = parse_unsigned( fanin[1], lines[1].number, "fan-in" );
  const auto v2 = parse_unsigned( fanin[2], lines[1].number, "fan-in" );
  std::optional<Netlist> built;
  try
  {
    built.emplace( v1, v2 );
  }
  catch ( std::invalid_argument const& ex )
  {
    throw parse_error( lines[1].number, ex.what() );
  }
  Netlist& nl = *built;

  std::map<std::string, GateId, std::less<>> names;
  auto resolve = [&]( std::string_view s, std::size_t number ) -> GateId {
    if ( is_gate_ref( s ) )
    {
      const auto id = *to_number<GateId>( s.substr( 1 ) );
      if ( id >= nl.gates().size() )
      {
        throw parse_error( number, "reference to undefined gate '" + std::string( s ) + "'" );
      }
      return id;
    }
    const auto it = names.find( s );
    if ( it == names.end() )
    {
      throw parse_error( number, "unknown input '" + std::string( s ) + "'" );
    }
    return it->second;
  };
  auto expect_next_id = [&]( std::string_view s, std::size_t number ) {
    const auto next = nl.gates().size();
    if ( !is_gate_ref( s ) || *to_number<GateId>( s.substr( 1 ) ) != next )
    {
      throw parse_error( number, "expected id g" + std::to_string( next ) + ", got '" + std::string( s ) + "'" );
    }
  };

  for ( std::size_t k = 2; k < lines.size(); ++k )
  {
    const auto number = lines[k].number;
    const auto tokens = split_ws( lines[k] );
    try
    {
      if ( tokens[0] == "input" )
      {
        if ( tokens.size() != 2 || !is_identifier( tokens[1] ) || is_gate_ref( tokens[1] ) )
        {
          throw parse_error( number, "expected 'input <name>'" );
        }
        if ( names.count( tokens[1] ) )
        {
          throw parse_error( number, "duplicate input '" + std::string( tokens[1] ) + "'" );
        }
        names.emplace( std::string( tokens[1] ), nl.add_input( std::string( tokens[1] ) ) );
      }
      else if ( tokens[0] == "const" )
      {
        if ( tokens.size() != 3 )
        {
          throw parse_error( number, "expected 'const g<id> <c>'" );
        }
        expect_next_id( tokens[1], number );
        nl.add_const( parse_qudit( tokens[2], number ) );
      }
      else if ( tokens[0] == "output" )
      {
        if ( tokens.size() != 3 || !is_identifier( tokens[1] ) )
        {
          throw parse_error( number, "expected 'output <name> <operand>'" );
        }
        nl.set_output( std::string( tokens[1] ), resolve( tokens[2], number ) );
      }
      else
      {
        if ( tokens.size() < 3 || tokens[1] != "=" )
        {
          throw parse_error( number, "expected 'g<id> = <KIND> <operand>...'" );
        }
        expect_next_id( tokens[0], number );
        const auto kind = parse_gate_kind( tokens[2] );
        if ( !kind || *kind == GateKind::Input || *kind == GateKind::Const )
        {
          throw parse_error( number, "unknown gate kind '" + std::string( tokens[2] ) + "'" );
        }
        std::vector<GateId> operands;
        for ( std::size_t t = 3; t < tokens.size(); ++t )
        {
          operands.push_back( resolve( tokens[t], number ) );
        }
        nl.add_gate( *kind, std::move( operands ) );
      }
    }
    catch ( std::invalid_argument const& ex )
    {
      throw parse_error( number, ex.what() );
    }
  }
  return std::move( *built );
}

std::string read_text_file( std::filesystem::path const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw std::runtime_error( "cannot open '" + path.string() + "'" );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file( std::filesystem::path const& path, std::string_view text )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
  {
    throw std::runtime_error( "cannot write '" + path.string() + "'" );
  }
  out << text;
}

} // namespace quat
