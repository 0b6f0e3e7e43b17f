#include <quat/function.hpp>

#include <random>

namespace quat
{

namespace
{

void check_arity( unsigned arity )
{
  if ( arity < 1 || arity > max_table_arity )
  {
    throw std::invalid_argument( "arity must be in 1.." + std::to_string( max_table_arity ) + ", got " +
                                 std::to_string( arity ) );
  }
}

} // namespace

std::size_t row_index( std::span<const Qudit> x ) noexcept
{
  std::size_t row = 0;
  for ( auto q : x )
  {
    row = ( row << 2 ) | static_cast<std::size_t>( q.value() );
  }
  return row;
}

InputVector row_vector( std::size_t row, unsigned arity )
{
  InputVector x( arity );
  for ( unsigned i = arity; i-- > 0; )
  {
    x[i] = Qudit{ static_cast<int>( row & 3u ) };
    row >>= 2;
  }
  return x;
}

std::string to_string( std::span<const Qudit> x )
{
  std::string s = "(";
  for ( std::size_t i = 0; i < x.size(); ++i )
  {
    if ( i )
    {
      s += ',';
    }
    s += static_cast<char>( '0' + x[i].value() );
  }
  s += ')';
  return s;
}

QFunction::QFunction( unsigned arity, std::vector<Qudit> outputs ) : arity_( arity ), outputs_( std::move( outputs ) )
{
  check_arity( arity );
  if ( outputs_.size() != table_size( arity ) )
  {
    throw std::invalid_argument( "truth table length mismatch: expected " + std::to_string( table_size( arity ) ) +
                                 " rows, got " + std::to_string( outputs_.size() ) );
  }
}

Qudit QFunction::eval( std::span<const Qudit> x ) const
{
  if ( x.size() != arity_ )
  {
    throw std::invalid_argument( "input vector has " + std::to_string( x.size() ) + " values, function arity is " +
                                 std::to_string( arity_ ) );
  }
  return outputs_[row_index( x )];
}

QFunction qf_from_rows( unsigned arity, std::vector<Qudit> outputs )
{
  return QFunction{ arity, std::move( outputs ) };
}

QFunction qf_from_values( unsigned arity, std::vector<int> const& outputs )
{
  std::vector<Qudit> qs;
  qs.reserve( outputs.size() );
  for ( int v : outputs )
  {
    qs.emplace_back( v );
  }
  return QFunction{ arity, std::move( qs ) };
}

Qudit qf_eval( QFunction const& f, std::span<const Qudit> x ) { return f.eval( x ); }

MintermPartition partition_minterms( QFunction const& f )
{
  MintermPartition p;
  for ( std::size_t row = 0; row < f.size(); ++row )
  {
    switch ( f[row].value() )
    {
    case 1:
      p.v1.push_back( row_vector( row, f.arity() ) );
      break;
    case 2:
      p.v2.push_back( row_vector( row, f.arity() ) );
      break;
    case 3:
      p.v3.push_back( row_vector( row, f.arity() ) );
      break;
    default:
      break;
    }
  }
  return p;
}

QFunction qf_random( unsigned arity, std::uint64_t seed )
{
  check_arity( arity );
  std::mt19937_64 gen( seed );
  std::vector<Qudit> outputs( table_size( arity ) );
  for ( auto& q : outputs )
  {
    q = Qudit{ static_cast<int>( gen() >> 62 ) };
  }
  return QFunction{ arity, std::move( outputs ) };
}

evaluation_error::evaluation_error( InputVector input, std::string const& what )
    : std::runtime_error( "evaluation failed at input " + to_string( input ) + ": " + what ), input_( std::move( input ) )
{
}

QFunction qf_of_evaluator( unsigned arity, Evaluator const& eval )
{
  check_arity( arity );
  std::vector<Qudit> outputs( table_size( arity ) );
  for ( std::size_t row = 0; row < outputs.size(); ++row )
  {
    auto x = row_vector( row, arity );
    try
    {
      outputs[row] = eval( x );
    }
    catch ( evaluation_error const& )
    {
      throw;
    }
    catch ( std::exception const& e )
    {
      throw evaluation_error( std::move( x ), e.what() );
    }
  }
  return QFunction{ arity, std::move( outputs ) };
}

std::size_t first_difference( QFunction const& a, QFunction const& b )
{
  if ( a.arity() != b.arity() )
  {
    return 0;
  }
  for ( std::size_t row = 0; row < a.size(); ++row )
  {
    if ( a[row] != b[row] )
    {
      return row;
    }
  }
  return a.size();
}

} // namespace quat
