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
  \file prime_generation.hpp
  \brief Tabular reduction from minterms to prime implicants

  The reduction works column by column.  Column 0 holds one cube per care
  minterm (onset and don't-care alike), grouped by the number of 1-bits.
  Each pass pairs every cube of a group with every cube of the group one
  above, applies the combination rule, and writes the merged cubes &mdash;
  duplicates removed &mdash; into the next column.  Both parents of a
  successful combination are ticked; a cube that survives all passes
  unticked cannot be enlarged and is therefore a prime implicant.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "implicant.hpp"

namespace qmin
{

/*! \brief A cube of the reduction tableau together with its tick mark. */
struct reduction_entry
{
  implicant cube;
  bool ticked{ false };

  bool operator==( reduction_entry const& other ) const = default;
};

/*! \brief Cubes of one column that share a 1-bit count. */
struct reduction_group
{
  uint32_t ones{};
  std::vector<reduction_entry> entries;
};

/*! \brief One column of the tableau; column \e i holds cubes with \e i dashes.
 *
 * Groups are kept in ascending order of their 1-bit count, which restricts
 * the combination step to adjacent groups: merging changes the count by
 * exactly one, so cubes from non-adjacent groups can never pair.
 */
struct reduction_column
{
  uint32_t index{};
  std::vector<reduction_group> groups;
};

/*! \brief Builds column 0 from the care minterms of a problem.
 *
 * Entries within a group appear in ascending minterm order, and groups in
 * ascending order of their 1-bit count.
 */
inline reduction_column group_by_ones( problem_spec const& problem )
{
  validate_problem( problem );
  std::vector<std::vector<reduction_entry>> buckets( problem.num_vars + 1u );
  for ( auto const minterm : care_minterms( problem ) )
  {
    auto const ones = static_cast<uint32_t>( std::popcount( minterm ) );
    buckets[ones].push_back( { make_implicant( minterm, problem.num_vars ), false } );
  }

  reduction_column column;
  for ( uint32_t ones = 0u; ones <= problem.num_vars; ++ones )
  {
    if ( !buckets[ones].empty() )
    {
      column.groups.push_back( { ones, std::move( buckets[ones] ) } );
    }
  }
  return column;
}

/*! \brief Runs one combination pass and produces the next column.
 *
 * Ticks every entry of \p column that participates in at least one
 * successful combination.  A merged cube is inserted into the next column
 * only once, no matter how many parent pairs produce it; the group it lands
 * in is keyed by the 1-bit count of the lower parent group.  Returns nothing
 * when no pair combines, which terminates the reduction.
 */
inline std::optional<reduction_column> reduction_pass( reduction_column& column )
{
  reduction_column next{ column.index + 1u, {} };
  std::unordered_set<implicant> seen;
  bool combined_any = false;

  for ( size_t g = 0u; g + 1u < column.groups.size(); ++g )
  {
    auto& lower = column.groups[g];
    auto& upper = column.groups[g + 1u];
    if ( upper.ones != lower.ones + 1u )
    {
      continue; /* gap in the 1-bit counts; nothing can pair */
    }

    std::vector<reduction_entry> merged;
    for ( auto& a : lower.entries )
    {
      for ( auto& b : upper.entries )
      {
        if ( auto const cube = combine( a.cube, b.cube ) )
        {
          a.ticked = true;
          b.ticked = true;
          combined_any = true;
          if ( seen.insert( *cube ).second )
          {
            merged.push_back( { *cube, false } );
          }
        }
      }
    }
    if ( !merged.empty() )
    {
      next.groups.push_back( { lower.ones, std::move( merged ) } );
    }
  }

  if ( !combined_any )
  {
    return std::nullopt;
  }
  return next;
}

/*! \brief Runs the reduction to completion and returns every column.
 *
 * The trace is useful for inspection and for printing; most callers only
 * need the primes and go through generate_primes instead.
 */
inline std::vector<reduction_column> run_reduction( problem_spec const& problem )
{
  std::vector<reduction_column> columns;
  columns.push_back( group_by_ones( problem ) );
  while ( auto next = reduction_pass( columns.back() ) )
  {
    columns.push_back( std::move( *next ) );
  }
  return columns;
}

/*! \brief Gathers the unticked cubes of a finished reduction.
 *
 * The result is sorted into the canonical order (see canonical_less) and
 * free of duplicates.
 */
inline std::vector<implicant> collect_primes( std::vector<reduction_column> const& columns )
{
  std::vector<implicant> primes;
  std::unordered_set<implicant> seen;
  for ( auto const& column : columns )
  {
    for ( auto const& group : column.groups )
    {
      for ( auto const& entry : group.entries )
      {
        if ( !entry.ticked && seen.insert( entry.cube ).second )
        {
          primes.push_back( entry.cube );
        }
      }
    }
  }
  std::sort( primes.begin(), primes.end(), canonical_less );
  return primes;
}

/*! \brief Computes all prime implicants of a problem.
 *
 * Requires at least one care minterm; a problem whose onset and don't-care
 * set are both empty has no cube to start from and is rejected.
 */
inline std::vector<implicant> generate_primes( problem_spec const& problem )
{
  validate_problem( problem );
  if ( problem.onset.empty() && problem.dontcare.empty() )
  {
    throw domain_error( "prime generation requires at least one onset or don't-care minterm" );
  }
  return collect_primes( run_reduction( problem ) );
}

} // namespace qmin
