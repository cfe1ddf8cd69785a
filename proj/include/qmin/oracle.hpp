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
  \file oracle.hpp
  \brief Brute-force reference implementations for checking results

  Everything in this namespace is deliberately naive: semantics are spelled
  out position by position, primes come from enumerating all 3^n cubes, and
  minimum cover sizes from trying subsets in increasing size.  None of it
  shares an algorithm with the production pipeline, which is the point: the
  two paths can only agree when both are right.  Each routine refuses
  instances above an explicit capacity bound instead of degenerating.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "cover_selection.hpp"
#include "errors.hpp"
#include "implicant.hpp"

namespace qmin::oracle
{

/*! \brief Variable bound for the 3^n cube and 2^n assignment scans. */
inline constexpr uint32_t default_enumeration_cap = 12u;

/*! \brief Prime-count bound for the subset search of minimum cover sizes. */
inline constexpr size_t default_subset_cap = 24u;

/*! \brief Kinds of disagreement between a cover and a problem. */
enum class violation_kind : uint8_t
{
  uncovered_onset, /*!< an onset minterm where the cover evaluates to 0 */
  covered_offset   /*!< an offset minterm where the cover evaluates to 1 */
};

/*! \brief One disagreement witness. */
struct violation
{
  violation_kind kind{};
  uint64_t minterm{};

  bool operator==( violation const& other ) const = default;
};

/*! \brief Verdict of an equivalence check with all witnesses. */
struct verdict
{
  bool ok{ true };
  std::vector<violation> violations;
};

/*! \brief Evaluates a product term at one assignment, variable by variable.
 *
 * Intentionally avoids the mask arithmetic of qmin::covers: each bound
 * position is compared on its own.
 */
inline bool eval_implicant( implicant const& imp, uint64_t assignment )
{
  if ( assignment > variable_mask( imp.num_vars ) )
  {
    throw domain_error( "assignment " + std::to_string( assignment ) + " is out of range for " +
                        std::to_string( imp.num_vars ) + " variables" );
  }
  for ( uint32_t bit = 0u; bit < imp.num_vars; ++bit )
  {
    uint64_t const mask = uint64_t( 1 ) << bit;
    if ( imp.dashes & mask )
    {
      continue;
    }
    if ( ( assignment & mask ) != ( imp.value & mask ) )
    {
      return false;
    }
  }
  return true;
}

/*! \brief Compares a cover against a problem over all 2^n assignments.
 *
 * The cover must evaluate to 1 on every onset minterm and to 0 on every
 * offset minterm; don't-care minterms may go either way.  All disagreements
 * are collected, in ascending assignment order.
 */
inline verdict check_equivalence( cover const& candidate, problem_spec const& problem )
{
  validate_problem( problem );
  if ( candidate.num_vars != problem.num_vars )
  {
    throw domain_error( "cover and problem disagree on the variable count" );
  }

  verdict result;
  size_t on = 0u, dc = 0u;
  uint64_t const space = variable_mask( problem.num_vars );
  for ( uint64_t x = 0u;; ++x )
  {
    bool const in_onset = on < problem.onset.size() && problem.onset[on] == x;
    bool const in_dontcare = dc < problem.dontcare.size() && problem.dontcare[dc] == x;
    if ( in_onset )
    {
      ++on;
    }
    if ( in_dontcare )
    {
      ++dc;
    }

    bool evaluates_true = false;
    for ( auto const& imp : candidate.implicants )
    {
      if ( eval_implicant( imp, x ) )
      {
        evaluates_true = true;
        break;
      }
    }

    if ( in_onset && !evaluates_true )
    {
      result.violations.push_back( { violation_kind::uncovered_onset, x } );
    }
    else if ( !in_onset && !in_dontcare && evaluates_true )
    {
      result.violations.push_back( { violation_kind::covered_offset, x } );
    }

    if ( x == space )
    {
      break;
    }
  }
  result.ok = result.violations.empty();
  return result;
}

namespace detail
{

/*! \brief Walks the minterms of a raw (value, dashes) cube. */
template<typename Fn>
inline bool for_each_cube_minterm( uint64_t value, uint64_t dashes, Fn&& fn )
{
  uint64_t subset = 0u;
  while ( true )
  {
    if ( !fn( value | subset ) )
    {
      return false;
    }
    if ( subset == dashes )
    {
      return true;
    }
    subset = ( subset - dashes ) & dashes;
  }
}

} // namespace detail

/*! \brief Computes prime implicants by scanning every cube of the space.
 *
 * A cube qualifies when all of its minterms are care minterms (onset or
 * don't-care) and no single additional dash preserves that property.  Cubes
 * are visited in lexicographic (dashes, value) order and the result is
 * sorted into the canonical order.  Refuses problems with more than
 * \p enumeration_cap variables: the scan costs O(3^n * 2^n) in the worst
 * case.
 */
inline std::vector<implicant> naive_primes( problem_spec const& problem,
                                            uint32_t enumeration_cap = default_enumeration_cap )
{
  validate_problem( problem );
  if ( problem.num_vars > enumeration_cap )
  {
    throw capacity_error( "naive prime enumeration refuses problems with more than " +
                          std::to_string( enumeration_cap ) + " variables" );
  }

  uint64_t const space = uint64_t( 1 ) << problem.num_vars;
  std::vector<uint64_t> care_words( size_t( ( space + 63u ) / 64u ), 0u );
  for ( auto const m : problem.onset )
  {
    care_words[m / 64u] |= uint64_t( 1 ) << ( m % 64u );
  }
  for ( auto const m : problem.dontcare )
  {
    care_words[m / 64u] |= uint64_t( 1 ) << ( m % 64u );
  }
  auto is_care = [&]( uint64_t m ) { return ( care_words[m / 64u] >> ( m % 64u ) ) & 1u; };
  auto contained_in_care = [&]( uint64_t value, uint64_t dashes ) {
    return detail::for_each_cube_minterm( value, dashes, [&]( uint64_t m ) { return is_care( m ) != 0u; } );
  };

  std::vector<implicant> primes;
  for ( uint64_t dashes = 0u; dashes < space; ++dashes )
  {
    for ( uint64_t value = 0u; value < space; ++value )
    {
      if ( value & dashes )
      {
        continue; /* not in canonical (value, dashes) form */
      }
      if ( !contained_in_care( value, dashes ) )
      {
        continue;
      }
      bool maximal = true;
      for ( uint32_t bit = 0u; bit < problem.num_vars && maximal; ++bit )
      {
        uint64_t const mask = uint64_t( 1 ) << bit;
        if ( dashes & mask )
        {
          continue;
        }
        if ( contained_in_care( value & ~mask, dashes | mask ) )
        {
          maximal = false; /* the cube still grows; not prime */
        }
      }
      if ( maximal )
      {
        primes.push_back( implicant{ problem.num_vars, value, dashes } );
      }
    }
  }
  std::sort( primes.begin(), primes.end(), canonical_less );
  return primes;
}

/*! \brief Finds the minimum number of primes covering the onset, by force.
 *
 * Enumerates prime subsets in increasing size and returns the first size
 * that covers every onset minterm.  An empty onset needs zero terms.
 * Refuses prime sets larger than \p subset_cap (the search is
 * combinatorial) and inherits the variable cap of naive_primes.
 */
inline size_t exhaustive_min_cover_size( problem_spec const& problem,
                                         uint32_t enumeration_cap = default_enumeration_cap,
                                         size_t subset_cap = default_subset_cap )
{
  validate_problem( problem );
  if ( problem.onset.empty() )
  {
    return 0u;
  }

  auto const primes = naive_primes( problem, enumeration_cap );
  if ( primes.size() > subset_cap )
  {
    throw capacity_error( "exhaustive cover search refuses prime sets larger than " +
                          std::to_string( subset_cap ) + " (got " + std::to_string( primes.size() ) + ")" );
  }

  /* coverage of each prime over the onset columns, packed into words */
  size_t const words = ( problem.onset.size() + 63u ) / 64u;
  std::vector<std::vector<uint64_t>> masks( primes.size(), std::vector<uint64_t>( words, 0u ) );
  std::vector<uint64_t> full( words, 0u );
  for ( size_t c = 0u; c < problem.onset.size(); ++c )
  {
    full[c / 64u] |= uint64_t( 1 ) << ( c % 64u );
    for ( size_t p = 0u; p < primes.size(); ++p )
    {
      if ( eval_implicant( primes[p], problem.onset[c] ) )
      {
        masks[p][c / 64u] |= uint64_t( 1 ) << ( c % 64u );
      }
    }
  }

  auto covers_all = [&]( std::vector<uint64_t> const& acc ) { return acc == full; };

  /* depth-first enumeration of size-k subsets in index order */
  auto exists_cover = [&]( size_t k ) {
    if ( k == 0u )
    {
      return covers_all( std::vector<uint64_t>( words, 0u ) );
    }
    std::vector<std::vector<uint64_t>> stack_acc( k + 1u, std::vector<uint64_t>( words, 0u ) );
    std::vector<size_t> choice( k, 0u );
    size_t depth = 0u;
    choice[0] = 0u;
    while ( true )
    {
      if ( choice[depth] + ( k - 1u - depth ) >= primes.size() )
      {
        /* not enough primes left; backtrack */
        if ( depth == 0u )
        {
          return false;
        }
        --depth;
        ++choice[depth];
        continue;
      }
      for ( size_t w = 0u; w < words; ++w )
      {
        stack_acc[depth + 1u][w] = stack_acc[depth][w] | masks[choice[depth]][w];
      }
      if ( depth + 1u == k )
      {
        if ( covers_all( stack_acc[k] ) )
        {
          return true;
        }
        ++choice[depth];
      }
      else
      {
        ++depth;
        choice[depth] = choice[depth - 1u] + 1u;
      }
    }
  };

  for ( size_t k = 0u; k <= primes.size(); ++k )
  {
    if ( exists_cover( k ) )
    {
      return k;
    }
  }
  throw domain_error( "prime set does not cover the onset" ); /* unreachable for valid inputs */
}

} // namespace qmin::oracle
