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
  \file implicant.hpp
  \brief Cube representation and the one-variable combination rule

  A product term (cube) over \e n Boolean variables is stored as a pair of
  bit masks: `value` holds the required polarity of every bound variable and
  `dashes` marks eliminated variables.  Variable 0 is the leftmost digit of
  the printed form and occupies the most significant of the \e n low bits, so
  the minterm 4 of a four-variable function reads `0100`.  Eliminated
  positions keep a zero value bit (`value & dashes == 0`), which makes plain
  field equality a canonical identity test and lets hash containers perform
  duplicate removal.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace qmin
{

/*! \brief Largest supported number of variables.
 *
 * Minterm indices, cube masks, and the size of the full assignment space all
 * stay representable in 64 bits up to this bound.
 */
inline constexpr uint32_t max_variables = 63u;

namespace detail
{

inline void check_num_vars( uint32_t num_vars )
{
  if ( num_vars < 1u || num_vars > max_variables )
  {
    throw domain_error( "number of variables must be between 1 and " + std::to_string( max_variables ) );
  }
}

} // namespace detail

/*! \brief Returns the mask selecting the \p num_vars low bits. */
inline uint64_t variable_mask( uint32_t num_vars )
{
  detail::check_num_vars( num_vars );
  return ( uint64_t( 1 ) << num_vars ) - 1u;
}

/*! \brief A product term over `num_vars` variables in (value, dash) form.
 *
 * Invariant: `value & dashes == 0` and both masks fit into the `num_vars`
 * low bits.  All factory and algorithm functions in the library maintain
 * the invariant; code that aggregate-initializes implicants directly is
 * responsible for it.
 */
struct implicant
{
  uint32_t num_vars{};
  uint64_t value{};
  uint64_t dashes{};

  bool operator==( implicant const& other ) const = default;
};

/*! \brief Creates the size-one cube of a single minterm. */
inline implicant make_implicant( uint64_t minterm, uint32_t num_vars )
{
  detail::check_num_vars( num_vars );
  if ( minterm > variable_mask( num_vars ) )
  {
    throw domain_error( "minterm " + std::to_string( minterm ) + " is out of range for " +
                        std::to_string( num_vars ) + " variables" );
  }
  return implicant{ num_vars, minterm, 0u };
}

/*! \brief Applies the combination rule AB + AB' = A to a pair of cubes.
 *
 * Two cubes merge exactly when their dash masks agree and their values
 * differ in a single bit; the merged cube eliminates that variable.  Returns
 * nothing when the pair does not combine (this includes equal cubes).
 */
inline std::optional<implicant> combine( implicant const& a, implicant const& b )
{
  if ( a.num_vars != b.num_vars )
  {
    throw domain_error( "combine requires implicants over the same variable count" );
  }
  if ( a.dashes != b.dashes )
  {
    return std::nullopt;
  }
  uint64_t const difference = a.value ^ b.value;
  if ( std::popcount( difference ) != 1 )
  {
    return std::nullopt;
  }
  return implicant{ a.num_vars, a.value & b.value, a.dashes | difference };
}

/*! \brief Checks whether a cube covers a minterm. */
inline bool covers( implicant const& imp, uint64_t minterm )
{
  if ( minterm > variable_mask( imp.num_vars ) )
  {
    throw domain_error( "minterm " + std::to_string( minterm ) + " is out of range for " +
                        std::to_string( imp.num_vars ) + " variables" );
  }
  return ( minterm & ~imp.dashes ) == imp.value;
}

/*! \brief Lists the minterms covered by a cube in ascending order.
 *
 * A cube with \e d dashes expands to 2^d minterms; the subset walk below
 * visits the dash-bit subsets in increasing numeric order.
 */
inline std::vector<uint64_t> expand_minterms( implicant const& imp )
{
  std::vector<uint64_t> minterms;
  minterms.reserve( size_t( 1 ) << std::popcount( imp.dashes ) );
  uint64_t subset = 0u;
  while ( true )
  {
    minterms.push_back( imp.value | subset );
    if ( subset == imp.dashes )
    {
      break;
    }
    subset = ( subset - imp.dashes ) & imp.dashes;
  }
  return minterms;
}

/*! \brief Number of 1-bits among the bound positions (the grouping key). */
inline uint32_t ones_count( implicant const& imp )
{
  return static_cast<uint32_t>( std::popcount( imp.value ) );
}

/*! \brief Number of bound variables, i.e., literals of the product term. */
inline uint32_t literal_count( implicant const& imp )
{
  return imp.num_vars - static_cast<uint32_t>( std::popcount( imp.dashes ) );
}

/*! \brief True when the cube binds no variable and covers the whole space. */
inline bool is_tautology( implicant const& imp )
{
  return imp.dashes == variable_mask( imp.num_vars );
}

/*! \brief Prints a cube in X notation, variable 0 leftmost. */
inline std::string to_string( implicant const& imp )
{
  detail::check_num_vars( imp.num_vars );
  std::string text( imp.num_vars, '0' );
  for ( uint32_t i = 0u; i < imp.num_vars; ++i )
  {
    uint64_t const bit = uint64_t( 1 ) << ( imp.num_vars - 1u - i );
    if ( imp.dashes & bit )
    {
      text[i] = 'X';
    }
    else if ( imp.value & bit )
    {
      text[i] = '1';
    }
  }
  return text;
}

/*! \brief Reads a cube from X notation ('X', 'x', and '-' all mark a dash). */
inline implicant implicant_from_string( std::string_view text )
{
  auto const num_vars = static_cast<uint32_t>( text.size() );
  detail::check_num_vars( num_vars );
  implicant imp{ num_vars, 0u, 0u };
  for ( uint32_t i = 0u; i < num_vars; ++i )
  {
    uint64_t const bit = uint64_t( 1 ) << ( num_vars - 1u - i );
    switch ( text[i] )
    {
    case '0':
      break;
    case '1':
      imp.value |= bit;
      break;
    case 'X':
    case 'x':
    case '-':
      imp.dashes |= bit;
      break;
    default:
      throw domain_error( std::string{ "invalid cube character '" } + text[i] + "'" );
    }
  }
  return imp;
}

/*! \brief Canonical deterministic order used for prime implicant lists.
 *
 * Larger cubes come first (dash count descending); ties break by value
 * ascending, then dash mask ascending.  Sorting with this comparator is what
 * makes every downstream stage &mdash; chart construction, essential
 * extraction, tie-breaking between equal-cost covers &mdash; reproducible.
 */
inline bool canonical_less( implicant const& a, implicant const& b )
{
  if ( a.num_vars != b.num_vars )
  {
    return a.num_vars < b.num_vars;
  }
  auto const da = std::popcount( a.dashes );
  auto const db = std::popcount( b.dashes );
  if ( da != db )
  {
    return da > db;
  }
  if ( a.value != b.value )
  {
    return a.value < b.value;
  }
  return a.dashes < b.dashes;
}

/*! \brief A single-output minimization problem.
 *
 * `onset` lists the minterms where the function must evaluate to 1 and
 * `dontcare` those where either output is acceptable; every remaining
 * assignment is the offset.  Both lists are strictly ascending and
 * disjoint.  The onset may be empty (a constant-0 function), which drivers
 * only accept when explicitly requested.
 */
struct problem_spec
{
  uint32_t num_vars{};
  std::vector<uint64_t> onset;
  std::vector<uint64_t> dontcare;

  bool operator==( problem_spec const& other ) const = default;
};

/*! \brief Checks the structural invariants of a problem.
 *
 * Throws qmin::domain_error when a list is not strictly ascending, an index
 * exceeds the assignment space, or the onset and don't-care sets overlap.
 */
inline void validate_problem( problem_spec const& problem )
{
  detail::check_num_vars( problem.num_vars );
  uint64_t const space = variable_mask( problem.num_vars );

  auto check_list = [&]( std::vector<uint64_t> const& list, char const* name ) {
    for ( size_t i = 0u; i < list.size(); ++i )
    {
      if ( list[i] > space )
      {
        throw domain_error( std::string{ name } + " minterm " + std::to_string( list[i] ) +
                            " is out of range for " + std::to_string( problem.num_vars ) + " variables" );
      }
      if ( i > 0u && list[i] <= list[i - 1u] )
      {
        throw domain_error( std::string{ name } + " minterms are not strictly ascending" );
      }
    }
  };
  check_list( problem.onset, "onset" );
  check_list( problem.dontcare, "don't-care" );

  /* the two sorted lists must not share an element */
  size_t i = 0u, j = 0u;
  while ( i < problem.onset.size() && j < problem.dontcare.size() )
  {
    if ( problem.onset[i] == problem.dontcare[j] )
    {
      throw domain_error( "minterm " + std::to_string( problem.onset[i] ) +
                          " appears in both the onset and the don't-care set" );
    }
    if ( problem.onset[i] < problem.dontcare[j] )
    {
      ++i;
    }
    else
    {
      ++j;
    }
  }
}

/*! \brief Sorted union of onset and don't-care minterms. */
inline std::vector<uint64_t> care_minterms( problem_spec const& problem )
{
  std::vector<uint64_t> care;
  care.reserve( problem.onset.size() + problem.dontcare.size() );
  std::merge( problem.onset.begin(), problem.onset.end(), problem.dontcare.begin(), problem.dontcare.end(),
              std::back_inserter( care ) );
  return care;
}

} // namespace qmin

template<>
struct std::hash<qmin::implicant>
{
  std::size_t operator()( qmin::implicant const& imp ) const noexcept
  {
    /* splitmix64 finalizer, chained over the three fields */
    auto mix = []( uint64_t x ) {
      x += 0x9e3779b97f4a7c15ull;
      x = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
      x = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebull;
      return x ^ ( x >> 31 );
    };
    return static_cast<std::size_t>( mix( imp.value ^ mix( imp.dashes ^ mix( imp.num_vars ) ) ) );
  }
};
