/* qmin: C++ exact two-level Boolean minimization library
 * Copyright (C) 2026 qmin contributors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file test_util.hpp
  \brief Shared helpers for the test suite

  The random generator is hand-rolled (splitmix64) so that seeded sequences
  are identical on every platform and standard library.  The chart helpers
  here enumerate covers by brute force and are intentionally separate from
  the search used in the library.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <qmin/qmin.hpp>

namespace qtest
{

/*! \brief Deterministic 64-bit generator (splitmix64). */
struct splitmix64
{
  explicit splitmix64( uint64_t seed ) : state( seed )
  {
  }

  uint64_t next()
  {
    uint64_t z = ( state += 0x9e3779b97f4a7c15ull );
    z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
    z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
    return z ^ ( z >> 31 );
  }

  uint64_t below( uint64_t bound )
  {
    return next() % bound;
  }

  uint64_t state;
};

inline qmin::implicant cube( std::string_view text )
{
  return qmin::implicant_from_string( text );
}

inline std::vector<qmin::implicant> cubes( std::vector<std::string> const& texts )
{
  std::vector<qmin::implicant> result;
  result.reserve( texts.size() );
  for ( auto const& text : texts )
  {
    result.push_back( qmin::implicant_from_string( text ) );
  }
  return result;
}

inline std::vector<std::string> strings( std::vector<qmin::implicant> const& implicants )
{
  std::vector<std::string> result;
  result.reserve( implicants.size() );
  for ( auto const& imp : implicants )
  {
    result.push_back( qmin::to_string( imp ) );
  }
  return result;
}

/*! \brief Assigns each minterm to onset / don't-care / offset with the given weights. */
inline qmin::problem_spec random_problem( uint32_t num_vars, splitmix64& rng, uint32_t onset_weight = 1u,
                                          uint32_t dontcare_weight = 1u, uint32_t offset_weight = 1u )
{
  qmin::problem_spec problem;
  problem.num_vars = num_vars;
  uint64_t const total = onset_weight + dontcare_weight + offset_weight;
  for ( uint64_t m = 0u; m < ( uint64_t( 1 ) << num_vars ); ++m )
  {
    auto const draw = rng.below( total );
    if ( draw < onset_weight )
    {
      problem.onset.push_back( m );
    }
    else if ( draw < onset_weight + dontcare_weight )
    {
      problem.dontcare.push_back( m );
    }
  }
  return problem;
}

/*! \brief Onset-only problem where each minterm joins with `percent`% probability. */
inline qmin::problem_spec random_onset_problem( uint32_t num_vars, splitmix64& rng, uint64_t percent )
{
  qmin::problem_spec problem;
  problem.num_vars = num_vars;
  for ( uint64_t m = 0u; m < ( uint64_t( 1 ) << num_vars ); ++m )
  {
    if ( rng.below( 100u ) < percent )
    {
      problem.onset.push_back( m );
    }
  }
  return problem;
}

/*! \brief Uniformly random cube in canonical (value, dashes) form. */
inline qmin::implicant random_cube( uint32_t num_vars, splitmix64& rng )
{
  qmin::implicant imp{ num_vars, 0u, 0u };
  for ( uint32_t i = 0u; i < num_vars; ++i )
  {
    uint64_t const bit = uint64_t( 1 ) << i;
    switch ( rng.below( 3u ) )
    {
    case 1u:
      imp.value |= bit;
      break;
    case 2u:
      imp.dashes |= bit;
      break;
    default:
      break;
    }
  }
  return imp;
}

/* ------------------------------------------------------------------ */
/* brute-force chart covering, independent of the library's search     */
/* ------------------------------------------------------------------ */

inline std::vector<std::vector<bool>> chart_row_coverage( qmin::pi_chart const& chart )
{
  std::vector<std::vector<bool>> coverage( chart.rows.size(),
                                           std::vector<bool>( chart.columns.size(), false ) );
  for ( size_t r = 0u; r < chart.rows.size(); ++r )
  {
    for ( size_t c = 0u; c < chart.columns.size(); ++c )
    {
      coverage[r][c] = qmin::oracle::eval_implicant( chart.rows[r], chart.columns[c] );
    }
  }
  return coverage;
}

inline bool subset_covers( std::vector<std::vector<bool>> const& coverage, size_t num_columns,
                           std::vector<size_t> const& picked )
{
  std::vector<bool> hit( num_columns, false );
  for ( auto const r : picked )
  {
    for ( size_t c = 0u; c < num_columns; ++c )
    {
      if ( coverage[r][c] )
      {
        hit[c] = true;
      }
    }
  }
  for ( size_t c = 0u; c < num_columns; ++c )
  {
    if ( !hit[c] )
    {
      return false;
    }
  }
  return true;
}

inline void for_each_size_k_subset( size_t row_count, size_t k, size_t start, std::vector<size_t>& picked,
                                    std::function<void( std::vector<size_t> const& )> const& fn )
{
  if ( picked.size() == k )
  {
    fn( picked );
    return;
  }
  for ( size_t r = start; r + ( k - picked.size() ) <= row_count; ++r )
  {
    picked.push_back( r );
    for_each_size_k_subset( row_count, k, r + 1u, picked, fn );
    picked.pop_back();
  }
}

/*! \brief Minimum number of rows covering all columns, by subset enumeration. */
inline size_t chart_min_cover_size( qmin::pi_chart const& chart )
{
  if ( chart.columns.empty() )
  {
    return 0u;
  }
  auto const coverage = chart_row_coverage( chart );
  for ( size_t k = 1u; k <= chart.rows.size(); ++k )
  {
    bool found = false;
    std::vector<size_t> picked;
    for_each_size_k_subset( chart.rows.size(), k, 0u, picked, [&]( std::vector<size_t> const& rows ) {
      if ( !found && subset_covers( coverage, chart.columns.size(), rows ) )
      {
        found = true;
      }
    } );
    if ( found )
    {
      return k;
    }
  }
  return SIZE_MAX; /* uncoverable */
}

/*! \brief All minimum-cardinality covers, as sorted row-index sets. */
inline std::vector<std::vector<size_t>> all_minimum_covers( qmin::pi_chart const& chart )
{
  std::vector<std::vector<size_t>> covers;
  if ( chart.columns.empty() )
  {
    return covers;
  }
  auto const k = chart_min_cover_size( chart );
  auto const coverage = chart_row_coverage( chart );
  std::vector<size_t> picked;
  for_each_size_k_subset( chart.rows.size(), k, 0u, picked, [&]( std::vector<size_t> const& rows ) {
    if ( subset_covers( coverage, chart.columns.size(), rows ) )
    {
      covers.push_back( rows );
    }
  } );
  return covers;
}

} // namespace qtest
