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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <unordered_set>
#include <vector>

#include <qmin/oracle.hpp>
#include <qmin/prime_generation.hpp>

#include "test_util.hpp"

using namespace qmin;
using qtest::cube;

namespace
{

/* the recurring four-variable example used throughout the suite */
problem_spec worked_example()
{
  return problem_spec{ 4u, { 4u, 5u, 6u, 9u, 11u, 12u, 13u, 14u }, { 0u, 1u, 3u, 7u } };
}

std::vector<std::string> flatten( reduction_column const& column )
{
  std::vector<std::string> cubes;
  for ( auto const& group : column.groups )
  {
    for ( auto const& entry : group.entries )
    {
      cubes.push_back( to_string( entry.cube ) );
    }
  }
  return cubes;
}

bool all_ticked( reduction_column const& column )
{
  for ( auto const& group : column.groups )
  {
    for ( auto const& entry : group.entries )
    {
      if ( !entry.ticked )
      {
        return false;
      }
    }
  }
  return true;
}

} // namespace

TEST( PrimeGenerationTest, group_by_ones_buckets_care_minterms )
{
  auto const column = group_by_ones( worked_example() );
  EXPECT_EQ( column.index, 0u );
  ASSERT_EQ( column.groups.size(), 4u );

  EXPECT_EQ( column.groups[0].ones, 0u );
  EXPECT_EQ( flatten( reduction_column{ 0u, { column.groups[0] } } ), ( std::vector<std::string>{ "0000" } ) );
  EXPECT_EQ( column.groups[1].ones, 1u );
  EXPECT_EQ( flatten( reduction_column{ 0u, { column.groups[1] } } ),
             ( std::vector<std::string>{ "0001", "0100" } ) );
  EXPECT_EQ( column.groups[2].ones, 2u );
  EXPECT_EQ( flatten( reduction_column{ 0u, { column.groups[2] } } ),
             ( std::vector<std::string>{ "0011", "0101", "0110", "1001", "1100" } ) );
  EXPECT_EQ( column.groups[3].ones, 3u );
  EXPECT_EQ( flatten( reduction_column{ 0u, { column.groups[3] } } ),
             ( std::vector<std::string>{ "0111", "1011", "1101", "1110" } ) );
}

TEST( PrimeGenerationTest, group_by_ones_trivial_problems )
{
  auto const single = group_by_ones( problem_spec{ 1u, { 0u }, {} } );
  ASSERT_EQ( single.groups.size(), 1u );
  EXPECT_EQ( single.groups[0].ones, 0u );
  EXPECT_EQ( single.groups[0].entries.size(), 1u );

  auto const top = group_by_ones( problem_spec{ 3u, { 7u }, {} } );
  ASSERT_EQ( top.groups.size(), 1u );
  EXPECT_EQ( top.groups[0].ones, 3u );
  EXPECT_EQ( to_string( top.groups[0].entries[0].cube ), "111" );
}

TEST( PrimeGenerationTest, reduction_pass_produces_the_first_merged_column )
{
  auto column0 = group_by_ones( worked_example() );
  auto const column1 = reduction_pass( column0 );
  ASSERT_TRUE( column1.has_value() );
  EXPECT_EQ( column1->index, 1u );

  /* every minterm cube pairs up at least once */
  EXPECT_TRUE( all_ticked( column0 ) );

  EXPECT_EQ( flatten( *column1 ),
             ( std::vector<std::string>{ "000X", "0X00", "00X1", "0X01", "X001", "010X", "01X0", "X100",
                                         "0X11", "X011", "01X1", "X101", "011X", "X110", "10X1", "1X01",
                                         "110X", "11X0" } ) );
}

TEST( PrimeGenerationTest, reduction_pass_removes_duplicate_merge_results )
{
  auto column0 = group_by_ones( worked_example() );
  auto column1 = reduction_pass( column0 );
  ASSERT_TRUE( column1.has_value() );
  auto const column2 = reduction_pass( *column1 );
  ASSERT_TRUE( column2.has_value() );

  /* 14 raw combinations collapse to 7 distinct cubes */
  EXPECT_EQ( flatten( *column2 ),
             ( std::vector<std::string>{ "0X0X", "0XX1", "X0X1", "XX01", "01XX", "X10X", "X1X0" } ) );
  EXPECT_TRUE( all_ticked( *column1 ) );
}

TEST( PrimeGenerationTest, reduction_pass_returns_nothing_when_no_pair_merges )
{
  /* lone minterm */
  auto lone = group_by_ones( problem_spec{ 2u, { 1u }, {} } );
  EXPECT_EQ( reduction_pass( lone ), std::nullopt );

  /* groups two apart cannot interact */
  auto gap = group_by_ones( problem_spec{ 2u, { 0u, 3u }, {} } );
  EXPECT_EQ( reduction_pass( gap ), std::nullopt );
  EXPECT_FALSE( all_ticked( gap ) );
}

TEST( PrimeGenerationTest, run_reduction_terminates_with_all_columns )
{
  auto const columns = run_reduction( worked_example() );
  ASSERT_EQ( columns.size(), 3u );
  EXPECT_EQ( columns[0].index, 0u );
  EXPECT_EQ( columns[1].index, 1u );
  EXPECT_EQ( columns[2].index, 2u );
  EXPECT_EQ( flatten( columns[2] ).size(), 7u );
}

TEST( PrimeGenerationTest, collect_primes_returns_unticked_cubes_in_canonical_order )
{
  auto const primes = collect_primes( run_reduction( worked_example() ) );
  EXPECT_EQ( qtest::strings( primes ),
             ( std::vector<std::string>{ "0X0X", "0XX1", "X0X1", "XX01", "01XX", "X10X", "X1X0" } ) );
}

TEST( PrimeGenerationTest, generate_primes_known_functions )
{
  EXPECT_EQ( qtest::strings( generate_primes( worked_example() ) ),
             ( std::vector<std::string>{ "0X0X", "0XX1", "X0X1", "XX01", "01XX", "X10X", "X1X0" } ) );

  /* full space collapses to the all-dash cube */
  EXPECT_EQ( qtest::strings( generate_primes( problem_spec{ 2u, { 0u, 1u, 2u, 3u }, {} } ) ),
             ( std::vector<std::string>{ "XX" } ) );

  EXPECT_EQ( qtest::strings( generate_primes( problem_spec{ 3u, { 3u, 5u, 6u, 7u }, {} } ) ),
             ( std::vector<std::string>{ "X11", "1X1", "11X" } ) );

  EXPECT_EQ( qtest::strings( generate_primes( problem_spec{ 3u, { 1u, 2u, 3u, 4u, 5u, 6u }, {} } ) ),
             ( std::vector<std::string>{ "0X1", "X01", "01X", "X10", "10X", "1X0" } ) );

  /* isolated minterms stay primes of size one */
  EXPECT_EQ( qtest::strings( generate_primes( problem_spec{ 3u, {}, { 1u, 2u } } ) ),
             ( std::vector<std::string>{ "001", "010" } ) );
}

TEST( PrimeGenerationTest, generate_primes_requires_a_care_minterm )
{
  EXPECT_THROW( generate_primes( problem_spec{ 3u, {}, {} } ), domain_error );
}

TEST( PrimeGenerationTest, columns_satisfy_structural_invariants )
{
  qtest::splitmix64 rng{ 2024u };
  for ( int round = 0; round < 60; ++round )
  {
    auto const num_vars = 2u + uint32_t( rng.below( 5u ) );
    auto const problem = qtest::random_problem( num_vars, rng );
    if ( problem.onset.empty() && problem.dontcare.empty() )
    {
      continue;
    }

    for ( auto const& column : run_reduction( problem ) )
    {
      std::unordered_set<implicant> seen;
      uint32_t previous_ones = 0u;
      bool first_group = true;
      for ( auto const& group : column.groups )
      {
        if ( !first_group )
        {
          EXPECT_LT( previous_ones, group.ones );
        }
        first_group = false;
        previous_ones = group.ones;
        EXPECT_FALSE( group.entries.empty() );
        for ( auto const& entry : group.entries )
        {
          /* column index equals the dash count; group key equals the 1-count */
          EXPECT_EQ( uint32_t( std::popcount( entry.cube.dashes ) ), column.index );
          EXPECT_EQ( ones_count( entry.cube ), group.ones );
          EXPECT_TRUE( seen.insert( entry.cube ).second );
        }
      }
    }
  }
}

TEST( PrimeGenerationTest, primes_match_the_naive_oracle_exhaustively_for_two_variables )
{
  /* every assignment of {onset, dontcare, offset} to the four minterms */
  for ( uint32_t assignment = 0u; assignment < 81u; ++assignment )
  {
    problem_spec problem{ 2u, {}, {} };
    uint32_t code = assignment;
    for ( uint64_t m = 0u; m < 4u; ++m, code /= 3u )
    {
      if ( code % 3u == 1u )
      {
        problem.onset.push_back( m );
      }
      else if ( code % 3u == 2u )
      {
        problem.dontcare.push_back( m );
      }
    }
    if ( problem.onset.empty() && problem.dontcare.empty() )
    {
      EXPECT_THROW( generate_primes( problem ), domain_error );
      EXPECT_TRUE( oracle::naive_primes( problem ).empty() );
      continue;
    }
    EXPECT_EQ( generate_primes( problem ), oracle::naive_primes( problem ) );
  }
}

TEST( PrimeGenerationTest, primes_match_the_naive_oracle_on_random_problems )
{
  qtest::splitmix64 rng{ 99u };
  for ( int round = 0; round < 120; ++round )
  {
    auto const num_vars = 4u + uint32_t( rng.below( 3u ) );
    auto const problem = qtest::random_problem( num_vars, rng );
    if ( problem.onset.empty() && problem.dontcare.empty() )
    {
      continue;
    }
    EXPECT_EQ( generate_primes( problem ), oracle::naive_primes( problem ) );
  }
}

TEST( PrimeGenerationTest, primes_are_maximal_and_cover_all_care_minterms )
{
  qtest::splitmix64 rng{ 31u };
  for ( int round = 0; round < 40; ++round )
  {
    auto const num_vars = 2u + uint32_t( rng.below( 5u ) );
    auto const problem = qtest::random_problem( num_vars, rng, 2u, 1u, 2u );
    if ( problem.onset.empty() && problem.dontcare.empty() )
    {
      continue;
    }

    auto const care = care_minterms( problem );
    auto const is_care = [&]( uint64_t m ) {
      return std::binary_search( care.begin(), care.end(), m );
    };

    std::vector<bool> covered( size_t( 1 ) << num_vars, false );
    for ( auto const& prime : generate_primes( problem ) )
    {
      for ( auto const m : expand_minterms( prime ) )
      {
        EXPECT_TRUE( is_care( m ) ); /* contained in the care set */
        covered[m] = true;
      }
      /* maximal: adding any single dash escapes the care set */
      for ( uint32_t bit = 0u; bit < num_vars; ++bit )
      {
        uint64_t const mask = uint64_t( 1 ) << bit;
        if ( prime.dashes & mask )
        {
          continue;
        }
        implicant const grown{ num_vars, prime.value & ~mask, prime.dashes | mask };
        bool escapes = false;
        for ( auto const m : expand_minterms( grown ) )
        {
          if ( !is_care( m ) )
          {
            escapes = true;
            break;
          }
        }
        EXPECT_TRUE( escapes );
      }
    }
    for ( auto const m : care )
    {
      EXPECT_TRUE( covered[m] ); /* completeness */
    }
  }
}
