#include <quat/minimize.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace quat
{

namespace
{

std::uint64_t key_of( Cube const& c ) { return ( std::uint64_t{ c.mask } << 32 ) | c.value; }

/* dynamic bitset over row indices of the cover matrix */
class RowSet
{
public:
  RowSet() = default;
  explicit RowSet( std::size_t n ) : words_( ( n + 63 ) / 64, 0 ) {}

  void set( std::size_t i ) { words_[i / 64] |= std::uint64_t{ 1 } << ( i % 64 ); }
  bool test( std::size_t i ) const { return ( words_[i / 64] >> ( i % 64 ) ) & 1; }

  bool none() const
  {
    return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0; } );
  }

  void subtract( RowSet const& other )
  {
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      words_[i] &= ~other.words_[i];
    }
  }

  bool intersects( RowSet const& other ) const
  {
    for ( std::size_t i = 0; i < words_.size(); ++i )
    {
      if ( words_[i] & other.words_[i] )
      {
        return true;
      }
    }
    return false;
  }

  template<class Fn>
  void for_each( Fn&& fn ) const
  {
    for ( std::size_t w = 0; w < words_.size(); ++w )
    {
      auto bits = words_[w];
      while ( bits )
      {
        fn( w * 64 + static_cast<std::size_t>( std::countr_zero( bits ) ) );
        bits &= bits - 1;
      }
    }
  }

private:
  std::vector<std::uint64_t> words_;
};

/* exact unate covering: rows are on-set minterms, columns are primes */
class CoverSolver
{
public:
  CoverSolver( std::vector<std::uint32_t> const& ones, std::vector<Cube> const& primes ) : primes_( primes )
  {
    row_cols_.resize( ones.size() );
    col_rows_.resize( primes.size() );
    for ( std::size_t c = 0; c < primes.size(); ++c )
    {
      for ( std::size_t r = 0; r < ones.size(); ++r )
      {
        if ( primes[c].covers( ones[r] ) )
        {
          row_cols_[r].push_back( static_cast<int>( c ) );
          col_rows_[c].push_back( static_cast<int>( r ) );
        }
      }
    }
    row_active_.assign( ones.size(), 1 );
    col_active_.assign( primes.size(), 1 );
  }

  std::vector<Cube> solve()
  {
    reduce();
    branch_and_bound();

    std::vector<Cube> result;
    for ( int c : selected_ )
    {
      result.push_back( primes_[c] );
    }
    for ( int c : best_ )
    {
      result.push_back( core_cols_[c] );
    }
    std::sort( result.begin(), result.end() );
    return result;
  }

private:
  bool cheaper_or_equal( int p, int q ) const
  {
    auto lp = primes_[p].literal_count();
    auto lq = primes_[q].literal_count();
    return lp < lq || ( lp == lq && primes_[p] < primes_[q] );
  }

  std::vector<int> active_cols_of_row( int r ) const
  {
    std::vector<int> out;
    for ( int c : row_cols_[r] )
    {
      if ( col_active_[c] )
      {
        out.push_back( c );
      }
    }
    return out;
  }

  std::vector<int> active_rows_of_col( int c ) const
  {
    std::vector<int> out;
    for ( int r : col_rows_[c] )
    {
      if ( row_active_[r] )
      {
        out.push_back( r );
      }
    }
    return out;
  }

  void select( int c )
  {
    selected_.push_back( c );
    col_active_[c] = 0;
    for ( int r : col_rows_[c] )
    {
      row_active_[r] = 0;
    }
  }

  void reduce()
  {
    bool changed = true;
    while ( changed )
    {
      changed = false;

      /* essential columns */
      for ( std::size_t r = 0; r < row_cols_.size(); ++r )
      {
        if ( !row_active_[r] )
        {
          continue;
        }
        auto cols = active_cols_of_row( static_cast<int>( r ) );
        if ( cols.size() == 1 )
        {
          select( cols.front() );
          changed = true;
        }
      }

      /* drop columns with nothing left to cover */
      for ( std::size_t c = 0; c < col_rows_.size(); ++c )
      {
        if ( col_active_[c] && active_rows_of_col( static_cast<int>( c ) ).empty() )
        {
          col_active_[c] = 0;
          changed = true;
        }
      }

      /* row dominance: a row whose columns include another row's columns is implied */
      for ( std::size_t a = 0; a < row_cols_.size(); ++a )
      {
        if ( !row_active_[a] )
        {
          continue;
        }
        auto cols_a = active_cols_of_row( static_cast<int>( a ) );
        if ( cols_a.empty() )
        {
          continue;
        }
        for ( int b : col_rows_[cols_a.front()] )
        {
          if ( b == static_cast<int>( a ) || !row_active_[b] )
          {
            continue;
          }
          auto cols_b = active_cols_of_row( b );
          if ( std::includes( cols_b.begin(), cols_b.end(), cols_a.begin(), cols_a.end() ) &&
               ( cols_b.size() > cols_a.size() || b > static_cast<int>( a ) ) )
          {
            row_active_[b] = 0;
            changed = true;
          }
        }
      }

      /* column dominance: drop q when some p covers its rows at no greater cost */
      for ( std::size_t q = 0; q < col_rows_.size(); ++q )
      {
        if ( !col_active_[q] )
        {
          continue;
        }
        auto rows_q = active_rows_of_col( static_cast<int>( q ) );
        if ( rows_q.empty() )
        {
          continue;
        }
        for ( int p : row_cols_[rows_q.front()] )
        {
          if ( p == static_cast<int>( q ) || !col_active_[p] )
          {
            continue;
          }
          if ( primes_[p].literal_count() > primes_[q].literal_count() )
          {
            continue;
          }
          auto rows_p = active_rows_of_col( p );
          if ( !std::includes( rows_p.begin(), rows_p.end(), rows_q.begin(), rows_q.end() ) )
          {
            continue;
          }
          if ( rows_p.size() == rows_q.size() && !cheaper_or_equal( p, static_cast<int>( q ) ) )
          {
            continue;
          }
          col_active_[q] = 0;
          changed = true;
          break;
        }
      }
    }
  }

  void branch_and_bound()
  {
    std::vector<int> rows;
    for ( std::size_t r = 0; r < row_active_.size(); ++r )
    {
      if ( row_active_[r] )
      {
        rows.push_back( static_cast<int>( r ) );
      }
    }
    if ( rows.empty() )
    {
      return;
    }

    std::vector<int> cols;
    for ( std::size_t c = 0; c < col_active_.size(); ++c )
    {
      if ( col_active_[c] )
      {
        cols.push_back( static_cast<int>( c ) );
      }
    }
    std::sort( cols.begin(), cols.end(), [this]( int a, int b ) { return cheaper_or_equal( a, b ); } );

    std::vector<int> row_pos( row_active_.size(), -1 );
    for ( std::size_t i = 0; i < rows.size(); ++i )
    {
      row_pos[rows[i]] = static_cast<int>( i );
    }

    core_rows_ = rows.size();
    core_row_cols_.assign( rows.size(), {} );
    core_col_rows_.assign( cols.size(), RowSet( rows.size() ) );
    for ( std::size_t c = 0; c < cols.size(); ++c )
    {
      core_cols_.push_back( primes_[cols[c]] );
      for ( int r : col_rows_[cols[c]] )
      {
        if ( row_pos[r] >= 0 )
        {
          core_col_rows_[c].set( static_cast<std::size_t>( row_pos[r] ) );
          core_row_cols_[row_pos[r]].push_back( static_cast<int>( c ) );
        }
      }
    }

    RowSet uncovered( rows.size() );
    for ( std::size_t i = 0; i < rows.size(); ++i )
    {
      uncovered.set( i );
    }
    std::vector<int> chosen;
    search( uncovered, chosen, 0 );
  }

  std::size_t independent_rows( RowSet const& uncovered ) const
  {
    std::vector<char> used( core_cols_.size(), 0 );
    std::size_t count = 0;
    uncovered.for_each( [&]( std::size_t r ) {
      auto const& cols = core_row_cols_[r];
      if ( std::none_of( cols.begin(), cols.end(), [&]( int c ) { return used[c]; } ) )
      {
        ++count;
        for ( int c : cols )
        {
          used[c] = 1;
        }
      }
    } );
    return count;
  }

  bool better_than_best( std::vector<int> const& chosen, unsigned lits ) const
  {
    if ( !have_best_ )
    {
      return true;
    }
    if ( chosen.size() != best_.size() )
    {
      return chosen.size() < best_.size();
    }
    if ( lits != best_lits_ )
    {
      return lits < best_lits_;
    }
    return sorted_cubes( chosen ) < sorted_cubes( best_ );
  }

  std::vector<Cube> sorted_cubes( std::vector<int> const& cols ) const
  {
    std::vector<Cube> cubes;
    for ( int c : cols )
    {
      cubes.push_back( core_cols_[c] );
    }
    std::sort( cubes.begin(), cubes.end() );
    return cubes;
  }

  void search( RowSet const& uncovered, std::vector<int>& chosen, unsigned lits )
  {
    if ( uncovered.none() )
    {
      if ( better_than_best( chosen, lits ) )
      {
        best_ = chosen;
        best_lits_ = lits;
        have_best_ = true;
      }
      return;
    }

    if ( have_best_ )
    {
      auto bound = chosen.size() + independent_rows( uncovered );
      if ( bound > best_.size() || ( bound == best_.size() && lits > best_lits_ ) )
      {
        return;
      }
    }

    std::size_t pick = 0;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    uncovered.for_each( [&]( std::size_t r ) {
      if ( core_row_cols_[r].size() < fewest )
      {
        fewest = core_row_cols_[r].size();
        pick = r;
      }
    } );

    for ( int c : core_row_cols_[pick] )
    {
      RowSet next = uncovered;
      next.subtract( core_col_rows_[c] );
      chosen.push_back( c );
      search( next, chosen, lits + core_cols_[c].literal_count() );
      chosen.pop_back();
    }
  }

  std::vector<Cube> const& primes_;
  std::vector<std::vector<int>> row_cols_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<char> row_active_;
  std::vector<char> col_active_;
  std::vector<int> selected_;

  std::size_t core_rows_ = 0;
  std::vector<Cube> core_cols_;
  std::vector<std::vector<int>> core_row_cols_;
  std::vector<RowSet> core_col_rows_;

  std::vector<int> best_;
  unsigned best_lits_ = 0;
  bool have_best_ = false;
};

} // namespace

BinaryFunction make_binary_function( unsigned bit_arity, std::vector<std::uint32_t> ones )
{
  if ( bit_arity > 31 )
  {
    throw std::invalid_argument( "binary arity too large: " + std::to_string( bit_arity ) );
  }
  std::sort( ones.begin(), ones.end() );
  ones.erase( std::unique( ones.begin(), ones.end() ), ones.end() );
  if ( !ones.empty() && ( ones.back() >> bit_arity ) != 0 )
  {
    throw std::invalid_argument( "minterm " + std::to_string( ones.back() ) + " exceeds binary arity " +
                                 std::to_string( bit_arity ) );
  }
  return BinaryFunction{ bit_arity, std::move( ones ) };
}

std::vector<Cube> prime_implicants( BinaryFunction const& f )
{
  const std::uint32_t full = f.bit_arity == 32 ? ~0u : ( ( std::uint32_t{ 1 } << f.bit_arity ) - 1 );

  std::vector<Cube> level;
  level.reserve( f.ones.size() );
  for ( auto m : f.ones )
  {
    level.push_back( Cube{ full, m } );
  }

  std::vector<Cube> primes;
  while ( !level.empty() )
  {
    std::unordered_set<std::uint64_t> present;
    present.reserve( level.size() * 2 );
    for ( auto const& c : level )
    {
      present.insert( key_of( c ) );
    }

    std::unordered_set<std::uint64_t> merged;
    std::unordered_set<std::uint64_t> next_keys;
    std::vector<Cube> next;
    for ( auto const& c : level )
    {
      for ( auto bits = c.mask; bits; bits &= bits - 1 )
      {
        const std::uint32_t bit = bits & ( ~bits + 1 );
        Cube neighbour{ c.mask, c.value ^ bit };
        if ( !present.contains( key_of( neighbour ) ) )
        {
          continue;
        }
        merged.insert( key_of( c ) );
        Cube joined{ c.mask & ~bit, c.value & ~bit };
        if ( next_keys.insert( key_of( joined ) ).second )
        {
          next.push_back( joined );
        }
      }
    }
    for ( auto const& c : level )
    {
      if ( !merged.contains( key_of( c ) ) )
      {
        primes.push_back( c );
      }
    }
    level = std::move( next );
  }

  std::sort( primes.begin(), primes.end() );
  return primes;
}

std::vector<Cube> minimize_binary( BinaryFunction const& f )
{
  if ( f.bit_arity > max_exact_bits )
  {
    throw std::invalid_argument( "exact minimization supports at most " + std::to_string( max_exact_bits ) +
                                 " binary variables, got " + std::to_string( f.bit_arity ) +
                                 "; reduce the function arity" );
  }
  if ( f.ones.empty() )
  {
    return {};
  }
  if ( f.ones.size() == ( std::size_t{ 1 } << f.bit_arity ) )
  {
    return { Cube{} };
  }
  auto primes = prime_implicants( f );
  return CoverSolver( f.ones, primes ).solve();
}

bool is_cover( BinaryFunction const& f, std::vector<Cube> const& cover )
{
  const std::size_t rows = std::size_t{ 1 } << f.bit_arity;
  std::size_t next_one = 0;
  for ( std::size_t m = 0; m < rows; ++m )
  {
    const bool on = next_one < f.ones.size() && f.ones[next_one] == m;
    if ( on )
    {
      ++next_one;
    }
    const bool covered = std::any_of( cover.begin(), cover.end(),
                                      [m]( Cube const& c ) { return c.covers( static_cast<std::uint32_t>( m ) ); } );
    if ( covered != on )
    {
      return false;
    }
  }
  return true;
}

} // namespace quat
