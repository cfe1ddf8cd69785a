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
  \file cover_selection.hpp
  \brief Prime implicant chart, essential extraction, and exact covering

  The chart records which prime implicant (row) covers which onset minterm
  (column).  Don't-care minterms participate in prime generation but never
  appear as columns: primes need not cover them.  Essential rows &mdash; the
  unique coverer of some column &mdash; are extracted first; the remaining
  (possibly cyclic) chart is shrunk by dominance reductions and solved
  exactly by branch and bound, so the returned cover always has minimum
  cardinality.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "implicant.hpp"
#include "prime_generation.hpp"

namespace qmin
{

/*! \brief Prime implicant chart over the onset columns.
 *
 * Row marks are packed into 64-bit words, one word block per row, so that
 * the covering search can subtract a whole row from the uncovered set with
 * a handful of AND-NOT operations.  `coverage_count[c]` is the number of
 * rows covering column \e c.
 */
struct pi_chart
{
  uint32_t num_vars{};
  std::vector<uint64_t> columns;
  std::vector<implicant> rows;
  std::vector<std::vector<uint64_t>> row_marks;
  std::vector<uint32_t> coverage_count;

  /*! \brief True when row \p r covers column \p c (both are indices). */
  bool mark( size_t r, size_t c ) const
  {
    return ( row_marks[r][c / 64u] >> ( c % 64u ) ) & 1u;
  }
};

/*! \brief Cost of a cover: number of product terms and total literals. */
struct cover_cost
{
  uint64_t terms{};
  uint64_t literals{};

  bool operator==( cover_cost const& other ) const = default;
};

/*! \brief A sum of products together with its cost.
 *
 * An empty implicant list denotes the constant-0 function; a single
 * all-dash implicant denotes constant 1.  The variable count is kept even
 * for the empty cover so that emitters know the width of the space.
 */
struct cover
{
  uint32_t num_vars{};
  std::vector<implicant> implicants;
  cover_cost cost{};

  bool operator==( cover const& other ) const = default;
};

/*! \brief Builds a cover from a term list, computing its cost. */
inline cover make_cover( uint32_t num_vars, std::vector<implicant> implicants )
{
  detail::check_num_vars( num_vars );
  cover result{ num_vars, std::move( implicants ), {} };
  result.cost.terms = result.implicants.size();
  for ( auto const& imp : result.implicants )
  {
    if ( imp.num_vars != num_vars )
    {
      throw domain_error( "cover contains an implicant over a different variable count" );
    }
    result.cost.literals += literal_count( imp );
  }
  return result;
}

/*! \brief Builds the prime implicant chart of a problem.
 *
 * Columns are the onset minterms in ascending order; rows keep the order of
 * \p primes.  Don't-care minterms are deliberately absent.
 */
inline pi_chart build_chart( std::vector<implicant> const& primes, problem_spec const& problem )
{
  validate_problem( problem );
  pi_chart chart;
  chart.num_vars = problem.num_vars;
  chart.columns = problem.onset;
  chart.rows = primes;
  size_t const words = ( chart.columns.size() + 63u ) / 64u;
  chart.row_marks.assign( chart.rows.size(), std::vector<uint64_t>( words, 0u ) );
  chart.coverage_count.assign( chart.columns.size(), 0u );
  for ( size_t r = 0u; r < chart.rows.size(); ++r )
  {
    for ( size_t c = 0u; c < chart.columns.size(); ++c )
    {
      if ( covers( chart.rows[r], chart.columns[c] ) )
      {
        chart.row_marks[r][c / 64u] |= uint64_t( 1 ) << ( c % 64u );
        ++chart.coverage_count[c];
      }
    }
  }
  return chart;
}

/*! \brief Result of essential extraction: the forced rows and what is left. */
struct essential_extraction
{
  std::vector<implicant> essentials;
  pi_chart reduced;
};

namespace detail
{

/*! \brief Copies the surviving rows and columns into a fresh chart. */
inline pi_chart subchart( pi_chart const& chart, std::vector<bool> const& row_alive,
                          std::vector<bool> const& col_alive )
{
  pi_chart sub;
  sub.num_vars = chart.num_vars;

  std::vector<size_t> old_cols;
  for ( size_t c = 0u; c < chart.columns.size(); ++c )
  {
    if ( col_alive[c] )
    {
      old_cols.push_back( c );
      sub.columns.push_back( chart.columns[c] );
    }
  }

  size_t const words = ( sub.columns.size() + 63u ) / 64u;
  sub.coverage_count.assign( sub.columns.size(), 0u );
  for ( size_t r = 0u; r < chart.rows.size(); ++r )
  {
    if ( !row_alive[r] )
    {
      continue;
    }
    sub.rows.push_back( chart.rows[r] );
    sub.row_marks.emplace_back( words, 0u );
    auto& marks = sub.row_marks.back();
    for ( size_t c = 0u; c < old_cols.size(); ++c )
    {
      if ( chart.mark( r, old_cols[c] ) )
      {
        marks[c / 64u] |= uint64_t( 1 ) << ( c % 64u );
        ++sub.coverage_count[c];
      }
    }
  }
  return sub;
}

} // namespace detail

/*! \brief Extracts essential rows until no column is covered by one row only.
 *
 * Each round scans the surviving columns in ascending order, takes the first
 * one with a single coverer, records that row as essential, and deletes the
 * row together with every column it covers.  Row deletion only ever removes
 * columns the row covers, so this terminates quickly; iterating to a fixed
 * point keeps the procedure correct even for charts handed in directly.
 * Non-essential rows stay in the reduced chart even if they no longer cover
 * any column; the covering search prunes them.
 */
inline essential_extraction extract_essentials( pi_chart const& chart )
{
  std::vector<bool> row_alive( chart.rows.size(), true );
  std::vector<bool> col_alive( chart.columns.size(), true );
  std::vector<implicant> essentials;

  while ( true )
  {
    size_t pick = chart.columns.size();
    for ( size_t c = 0u; c < chart.columns.size(); ++c )
    {
      if ( col_alive[c] && chart.coverage_count[c] == 1u )
      {
        pick = c;
        break;
      }
    }
    if ( pick == chart.columns.size() )
    {
      break;
    }

    size_t essential_row = chart.rows.size();
    for ( size_t r = 0u; r < chart.rows.size(); ++r )
    {
      if ( row_alive[r] && chart.mark( r, pick ) )
      {
        essential_row = r;
        break;
      }
    }

    essentials.push_back( chart.rows[essential_row] );
    row_alive[essential_row] = false;
    for ( size_t c = 0u; c < chart.columns.size(); ++c )
    {
      if ( col_alive[c] && chart.mark( essential_row, c ) )
      {
        col_alive[c] = false;
      }
    }
  }

  return { std::move( essentials ), detail::subchart( chart, row_alive, col_alive ) };
}

namespace detail
{

/*! \brief Exact covering under the (terms, literals, row order) objective.
 *
 * The optimum value is computed first.  The chart is shrunk to a fixed
 * point with the classic reductions &mdash; a column covered by a single
 * surviving row forces that row into the cover, a row whose columns are
 * covered by another row of no higher literal cost is dropped, and a
 * column whose coverers include all coverers of another column is
 * redundant &mdash; and the remaining cyclic core is searched exhaustively.
 * The search branches on the uncovered column with the fewest unbanned
 * candidate rows (ties to the leftmost column); after a candidate's
 * subtree has been explored the row is banned for the sibling branches, so
 * every irredundant cover of the core is visited exactly once as a set.  A
 * greedy cover seeds the incumbent and partial selections are cut with an
 * independent-columns lower bound, keeping every equal-size competitor
 * alive for the cost tie-break.
 *
 * Every reduction preserves the minimum term count and, among covers of
 * that size, the minimum literal count.  Most also preserve the final
 * lexicographic key: a dominated row with an earlier dominator of no
 * higher cost, or with a strictly cheaper dominator anywhere, can appear
 * in no lexicographically smallest optimum.  The one exception is a row
 * dominated only by a later row of equal cost.  When such a deletion
 * fires, the first pass still yields the exact optimum size and cost, and
 * a second pass rebuilds the lexicographically smallest cover of that size
 * and cost directly: it grows a prefix through the rows in order and keeps
 * a candidate exactly when the columns it leaves uncovered still admit a
 * completion with the remaining row and literal budget, each such test
 * being another (small) exact value computation.
 */
class cover_search
{
public:
  explicit cover_search( pi_chart const& chart )
      : chart_( chart ), words_( ( chart.columns.size() + 63u ) / 64u )
  {
    for ( size_t c = 0u; c < chart_.columns.size(); ++c )
    {
      bool covered = false;
      for ( size_t r = 0u; r < chart_.rows.size() && !covered; ++r )
      {
        covered = chart_.mark( r, c );
      }
      if ( !covered )
      {
        throw domain_error( "chart column " + std::to_string( chart_.columns[c] ) +
                            " is not covered by any row" );
      }
    }
  }

  std::vector<size_t> run()
  {
    std::vector<uint64_t> all_cols( words_, 0u );
    for ( size_t c = 0u; c < chart_.columns.size(); ++c )
    {
      all_cols[c / 64u] |= uint64_t( 1 ) << ( c % 64u );
    }
    never_optimal_.assign( chart_.rows.size(), false );
    std::vector<char> const no_rows( chart_.rows.size(), 0 );
    auto const whole = solve_value( all_cols, no_rows, true );
    if ( whole.lex_exact )
    {
      return whole.rows;
    }
    return lex_refine( all_cols, whole );
  }

private:
  /*! \brief Outcome of one exact value computation on a sub-chart. */
  struct value_result
  {
    std::vector<size_t> rows; /*!< an optimal cover, ascending */
    uint64_t literals{ 0u };  /*!< its total literal count */
    bool lex_exact{ false };  /*!< rows is also the lexicographic optimum */
    bool ok{ true };          /*!< every requested column was coverable */
  };

  /*! \brief Finds an optimal cover of the given columns by the non-excluded
   * rows, reducing first and searching the surviving core. */
  value_result solve_value( std::vector<uint64_t> const& cols, std::vector<char> const& excluded,
                            bool record_skips )
  {
    row_alive_.assign( chart_.rows.size(), true );
    for ( size_t r = 0u; r < chart_.rows.size(); ++r )
    {
      if ( excluded[r] )
      {
        row_alive_[r] = false;
      }
    }
    alive_cols_ = cols;
    forced_.clear();
    lex_exact_ = true;
    record_skips_ = record_skips;

    while ( take_forced_row() || drop_dominated_rows() || drop_dominated_columns() )
    {
    }

    value_result out;
    out.rows = forced_;
    for ( auto const r : forced_ )
    {
      out.literals += literal_count( chart_.rows[r] );
    }
    if ( !all_zero( alive_cols_ ) )
    {
      if ( !prepare_search() )
      {
        out.ok = false;
        return out;
      }
      selected_.clear();
      selected_literals_ = 0u;
      has_best_ = false;
      best_rows_.clear();
      best_literals_ = 0u;
      seed_greedy();
      descend( alive_cols_ );
      out.rows.insert( out.rows.end(), best_rows_.begin(), best_rows_.end() );
      out.literals += best_literals_;
    }
    std::sort( out.rows.begin(), out.rows.end() );
    out.lex_exact = lex_exact_;
    return out;
  }

  /*! \brief Rebuilds the lexicographically smallest cover of the known
   * optimal size and literal cost by growing a prefix row by row. */
  std::vector<size_t> lex_refine( std::vector<uint64_t> const& all_cols, value_result const& whole )
  {
    std::vector<size_t> prefix;
    std::vector<char> used( chart_.rows.size(), 0 );
    std::vector<uint64_t> remaining = all_cols;
    uint64_t spent = 0u;

    for ( size_t r = 0u; r < chart_.rows.size() && prefix.size() < whole.rows.size(); ++r )
    {
      if ( never_optimal_[r] )
      {
        continue;
      }
      uint64_t const cost = literal_count( chart_.rows[r] );
      if ( spent + cost > whole.literals )
      {
        continue;
      }
      bool useful = false;
      for ( size_t w = 0u; w < words_ && !useful; ++w )
      {
        useful = ( chart_.row_marks[r][w] & remaining[w] ) != 0u;
      }
      if ( !useful )
      {
        continue;
      }

      std::vector<uint64_t> residual = remaining;
      for ( size_t w = 0u; w < words_; ++w )
      {
        residual[w] &= ~chart_.row_marks[r][w];
      }
      size_t const slots = whole.rows.size() - prefix.size() - 1u;
      bool feasible = false;
      if ( all_zero( residual ) )
      {
        feasible = slots == 0u;
      }
      else if ( slots > 0u )
      {
        used[r] = 1;
        auto const rest = solve_value( residual, used, false );
        used[r] = 0;
        feasible = rest.ok && rest.rows.size() == slots &&
                   spent + cost + rest.literals <= whole.literals;
      }
      if ( feasible )
      {
        prefix.push_back( r );
        used[r] = 1;
        remaining = std::move( residual );
        spent += cost;
      }
    }
    /* the prefix always completes: each kept row was certified extendable */
    return prefix.size() == whole.rows.size() ? prefix : whole.rows;
  }

  static bool all_zero( std::vector<uint64_t> const& mask )
  {
    for ( auto const word : mask )
    {
      if ( word != 0u )
      {
        return false;
      }
    }
    return true;
  }

  bool col_alive( size_t c ) const
  {
    return ( alive_cols_[c / 64u] >> ( c % 64u ) ) & 1u;
  }

  uint64_t effective_word( size_t r, size_t w ) const
  {
    return chart_.row_marks[r][w] & alive_cols_[w];
  }

  /*! \brief Claims the first column left with exactly one candidate row. */
  bool take_forced_row()
  {
    for ( size_t c = 0u; c < chart_.columns.size(); ++c )
    {
      if ( !col_alive( c ) )
      {
        continue;
      }
      size_t found = chart_.rows.size();
      size_t count = 0u;
      for ( size_t r = 0u; r < chart_.rows.size() && count < 2u; ++r )
      {
        if ( row_alive_[r] && chart_.mark( r, c ) )
        {
          ++count;
          found = r;
        }
      }
      if ( count == 1u )
      {
        forced_.push_back( found );
        row_alive_[found] = false;
        for ( size_t w = 0u; w < words_; ++w )
        {
          alive_cols_[w] &= ~chart_.row_marks[found][w];
        }
        return true;
      }
    }
    return false;
  }

  /*! \brief Drops rows another row makes redundant at no extra literal cost.
   *
   * Swapping the dominated row for its dominator never worsens the
   * cardinality or the literal cost, so every deletion here preserves the
   * optimum value.  It also preserves the lexicographic key unless the only
   * dominator is a later row of equal cost; that case clears lex_exact_ so
   * the caller re-derives the lexicographic optimum afterwards.  Rows whose
   * deletion is lexicographically safe can appear in no such optimum at
   * all, which the top-level pass records to skip them when re-deriving. */
  bool drop_dominated_rows()
  {
    bool changed = false;
    for ( size_t r = 0u; r < chart_.rows.size(); ++r )
    {
      if ( !row_alive_[r] )
      {
        continue;
      }

      bool empty = true;
      for ( size_t w = 0u; w < words_ && empty; ++w )
      {
        empty = effective_word( r, w ) == 0u;
      }
      if ( empty )
      {
        row_alive_[r] = false;
        if ( record_skips_ )
        {
          never_optimal_[r] = true;
        }
        changed = true;
        continue;
      }

      auto const r_literals = literal_count( chart_.rows[r] );
      for ( size_t s = 0u; s < chart_.rows.size(); ++s )
      {
        if ( s == r || !row_alive_[s] )
        {
          continue;
        }
        auto const s_literals = literal_count( chart_.rows[s] );
        if ( s_literals > r_literals )
        {
          continue;
        }
        bool subset = true;
        bool equal = true;
        for ( size_t w = 0u; w < words_ && subset; ++w )
        {
          auto const r_word = effective_word( r, w );
          auto const s_word = effective_word( s, w );
          subset = ( r_word & ~s_word ) == 0u;
          equal = equal && r_word == s_word;
        }
        if ( !subset || ( equal && s_literals == r_literals && s > r ) )
        {
          continue; /* on a full tie the earlier row survives */
        }
        if ( s < r || s_literals < r_literals )
        {
          if ( record_skips_ )
          {
            never_optimal_[r] = true;
          }
        }
        else
        {
          lex_exact_ = false;
        }
        row_alive_[r] = false;
        changed = true;
        break;
      }
    }
    return changed;
  }

  /*! \brief Drops columns whose coverage is implied by a harder column. */
  bool drop_dominated_columns()
  {
    size_t const row_words = ( chart_.rows.size() + 63u ) / 64u;
    std::vector<std::vector<uint64_t>> col_bits( chart_.columns.size() );
    for ( size_t c = 0u; c < chart_.columns.size(); ++c )
    {
      if ( !col_alive( c ) )
      {
        continue;
      }
      col_bits[c].assign( row_words, 0u );
      for ( size_t r = 0u; r < chart_.rows.size(); ++r )
      {
        if ( row_alive_[r] && chart_.mark( r, c ) )
        {
          col_bits[c][r / 64u] |= uint64_t( 1 ) << ( r % 64u );
        }
      }
    }

    bool changed = false;
    for ( size_t d = 0u; d < chart_.columns.size(); ++d )
    {
      if ( !col_alive( d ) )
      {
        continue;
      }
      for ( size_t c = 0u; c < chart_.columns.size(); ++c )
      {
        if ( c == d || !col_alive( c ) )
        {
          continue;
        }
        bool subset = true;
        bool equal = true;
        for ( size_t w = 0u; w < row_words && subset; ++w )
        {
          subset = ( col_bits[c][w] & ~col_bits[d][w] ) == 0u;
          equal = equal && col_bits[c][w] == col_bits[d][w];
        }
        if ( subset && ( !equal || c < d ) )
        {
          alive_cols_[d / 64u] &= ~( uint64_t( 1 ) << ( d % 64u ) );
          changed = true;
          break;
        }
      }
    }
    return changed;
  }

  bool prepare_search()
  {
    col_rows_.assign( chart_.columns.size(), {} );
    for ( size_t c = 0u; c < chart_.columns.size(); ++c )
    {
      if ( !col_alive( c ) )
      {
        continue;
      }
      for ( size_t r = 0u; r < chart_.rows.size(); ++r )
      {
        if ( row_alive_[r] && chart_.mark( r, c ) )
        {
          col_rows_[c].push_back( r );
        }
      }
      if ( col_rows_[c].empty() )
      {
        return false; /* no remaining row can cover this column */
      }
    }
    banned_.assign( chart_.rows.size(), false );
    lb_stamp_of_.assign( chart_.rows.size(), 0u );
    return true;
  }

  /*! \brief Seeds the incumbent with a greedy cover of the remaining core. */
  void seed_greedy()
  {
    std::vector<uint64_t> uncovered = alive_cols_;
    std::vector<size_t> picks;
    uint64_t literals = 0u;
    while ( !all_zero( uncovered ) )
    {
      size_t best_row = chart_.rows.size();
      size_t best_gain = 0u;
      uint32_t best_cost = 0u;
      for ( size_t r = 0u; r < chart_.rows.size(); ++r )
      {
        if ( !row_alive_[r] )
        {
          continue;
        }
        size_t gain = 0u;
        for ( size_t w = 0u; w < words_; ++w )
        {
          gain += size_t( std::popcount( chart_.row_marks[r][w] & uncovered[w] ) );
        }
        auto const cost = literal_count( chart_.rows[r] );
        if ( gain > best_gain || ( gain == best_gain && gain > 0u && cost < best_cost ) )
        {
          best_row = r;
          best_gain = gain;
          best_cost = cost;
        }
      }
      if ( best_gain == 0u )
      {
        return; /* unreachable: reductions keep every column coverable */
      }
      picks.push_back( best_row );
      literals += best_cost;
      for ( size_t w = 0u; w < words_; ++w )
      {
        uncovered[w] &= ~chart_.row_marks[best_row][w];
      }
    }
    std::sort( picks.begin(), picks.end() );
    has_best_ = true;
    best_rows_ = std::move( picks );
    best_literals_ = literals;
  }

  /*! \brief Columns pairwise sharing no candidate row each need their own row. */
  size_t lower_bound( std::vector<uint64_t> const& uncovered )
  {
    ++lb_stamp_;
    size_t needed = 0u;
    for ( size_t c = 0u; c < chart_.columns.size(); ++c )
    {
      if ( !( ( uncovered[c / 64u] >> ( c % 64u ) ) & 1u ) )
      {
        continue;
      }
      bool touched = false;
      for ( auto const r : col_rows_[c] )
      {
        if ( !banned_[r] && lb_stamp_of_[r] == lb_stamp_ )
        {
          touched = true;
          break;
        }
      }
      if ( touched )
      {
        continue;
      }
      ++needed;
      for ( auto const r : col_rows_[c] )
      {
        if ( !banned_[r] )
        {
          lb_stamp_of_[r] = lb_stamp_;
        }
      }
    }
    return needed;
  }

  void offer_candidate()
  {
    std::vector<size_t> rows = selected_;
    std::sort( rows.begin(), rows.end() );
    if ( !has_best_ || rows.size() < best_rows_.size() ||
         ( rows.size() == best_rows_.size() &&
           ( selected_literals_ < best_literals_ ||
             ( selected_literals_ == best_literals_ && rows < best_rows_ ) ) ) )
    {
      has_best_ = true;
      best_rows_ = std::move( rows );
      best_literals_ = selected_literals_;
    }
  }

  void descend( std::vector<uint64_t> const& uncovered )
  {
    if ( all_zero( uncovered ) )
    {
      offer_candidate();
      return;
    }
    if ( has_best_ && selected_.size() + lower_bound( uncovered ) > best_rows_.size() )
    {
      return; /* cannot reach the incumbent's cardinality on this path */
    }

    /* branch on the uncovered column with the fewest unbanned candidates */
    size_t branch_col = chart_.columns.size();
    size_t branch_count = std::numeric_limits<size_t>::max();
    for ( size_t c = 0u; c < chart_.columns.size(); ++c )
    {
      if ( !( ( uncovered[c / 64u] >> ( c % 64u ) ) & 1u ) )
      {
        continue;
      }
      size_t count = 0u;
      for ( auto const r : col_rows_[c] )
      {
        if ( !banned_[r] )
        {
          ++count;
        }
      }
      if ( count < branch_count )
      {
        branch_count = count;
        branch_col = c;
      }
    }
    if ( branch_count == 0u )
    {
      return; /* every candidate for that column was banned on this path */
    }

    std::vector<size_t> banned_here;
    for ( auto const r : col_rows_[branch_col] )
    {
      if ( banned_[r] )
      {
        continue;
      }
      selected_.push_back( r );
      selected_literals_ += literal_count( chart_.rows[r] );
      std::vector<uint64_t> next = uncovered;
      for ( size_t w = 0u; w < words_; ++w )
      {
        next[w] &= ~chart_.row_marks[r][w];
      }
      descend( next );
      selected_literals_ -= literal_count( chart_.rows[r] );
      selected_.pop_back();

      banned_[r] = true;
      banned_here.push_back( r );
    }
    for ( auto const r : banned_here )
    {
      banned_[r] = false;
    }
  }

  pi_chart const& chart_;
  size_t words_;
  std::vector<bool> row_alive_;
  std::vector<uint64_t> alive_cols_;
  std::vector<size_t> forced_;
  std::vector<bool> never_optimal_;
  bool record_skips_{ false };
  bool lex_exact_{ true };
  std::vector<std::vector<size_t>> col_rows_;
  std::vector<bool> banned_;
  std::vector<uint64_t> lb_stamp_of_;
  uint64_t lb_stamp_{ 0u };
  std::vector<size_t> selected_;
  uint64_t selected_literals_{ 0u };
  bool has_best_{ false };
  std::vector<size_t> best_rows_;
  uint64_t best_literals_{ 0u };
};

} // namespace detail

/*! \brief Solves the reduced chart exactly.
 *
 * Returns a minimum-cardinality set of rows covering every column, in row
 * order.  Ties on cardinality break by total literal count, then by the
 * lexicographically smallest sequence of row positions, so the answer is a
 * deterministic function of the chart alone.  An empty chart yields an
 * empty selection.
 */
inline std::vector<implicant> solve_reduced( pi_chart const& reduced )
{
  if ( reduced.columns.empty() )
  {
    return {};
  }
  detail::cover_search search{ reduced };
  auto const rows = search.run();
  std::vector<implicant> selection;
  selection.reserve( rows.size() );
  for ( auto const r : rows )
  {
    selection.push_back( reduced.rows[r] );
  }
  return selection;
}

/*! \brief Classification of a minimized function. */
enum class constant_kind : uint8_t
{
  none, /*!< depends on at least one variable */
  zero, /*!< empty cover */
  one   /*!< single all-dash implicant */
};

/*! \brief Full record of one minimization run.
 *
 * Keeps every intermediate stage &mdash; reduction columns, primes, chart,
 * essentials, reduced chart, and the selection made on it &mdash; so that
 * drivers can print traces or reports without re-running the pipeline.
 */
struct minimize_report
{
  problem_spec problem;
  std::vector<reduction_column> columns;
  std::vector<implicant> primes;
  pi_chart chart;
  std::vector<implicant> essentials;
  pi_chart reduced;
  std::vector<implicant> selected;
  cover result;
  constant_kind constant{ constant_kind::none };
};

/*! \brief Runs the complete minimization pipeline.
 *
 * The returned cover lists the essential primes first (in extraction order)
 * followed by the rows chosen from the reduced chart (in row order).  It is
 * always exact: no smaller cover of the onset exists.  A problem without
 * care minterms short-circuits to the constant-0 cover.
 */
inline minimize_report minimize( problem_spec const& problem )
{
  validate_problem( problem );
  minimize_report report;
  report.problem = problem;

  if ( problem.onset.empty() && problem.dontcare.empty() )
  {
    report.chart.num_vars = problem.num_vars;
    report.reduced.num_vars = problem.num_vars;
    report.result = make_cover( problem.num_vars, {} );
    report.constant = constant_kind::zero;
    return report;
  }

  report.columns = run_reduction( problem );
  report.primes = collect_primes( report.columns );
  report.chart = build_chart( report.primes, problem );

  auto extraction = extract_essentials( report.chart );
  report.essentials = std::move( extraction.essentials );
  report.reduced = std::move( extraction.reduced );
  report.selected = solve_reduced( report.reduced );

  std::vector<implicant> implicants = report.essentials;
  implicants.insert( implicants.end(), report.selected.begin(), report.selected.end() );
  report.result = make_cover( problem.num_vars, std::move( implicants ) );

  if ( report.result.implicants.empty() )
  {
    report.constant = constant_kind::zero;
  }
  else if ( report.result.implicants.size() == 1u && is_tautology( report.result.implicants.front() ) )
  {
    report.constant = constant_kind::one;
  }
  return report;
}

} // namespace qmin
