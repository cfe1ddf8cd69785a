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
  \file qmin.cpp
  \brief Command-line driver

  Subcommands: `minimize` (print an exact minimum cover), `primes` (list all
  prime implicants), `verify` (re-check a run against the brute-force
  oracles), and `bench` (CSV timings over random onsets).  Exit codes:
  0 on success, 1 for invalid input or failed verification, 2 when a
  capacity guard refuses the request.
*/

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qmin/qmin.hpp>

namespace
{

struct input_options
{
  std::string spec_text;
  std::string spec_file;
  std::string pla_file;
  bool allow_empty_onset{ false };
  uint32_t max_vars{ 26u };
};

void add_input_options( CLI::App* cmd, input_options& opts )
{
  auto* spec = cmd->add_option( "--spec", opts.spec_text,
                                "problem text, e.g. \"vars=3; minterms=1,2,5; dontcares=2\"" );
  auto* spec_file = cmd->add_option( "--spec-file", opts.spec_file, "file with a problem in --spec notation" )
                        ->check( CLI::ExistingFile );
  auto* pla = cmd->add_option( "--pla", opts.pla_file, "file with a single-output PLA" )
                  ->check( CLI::ExistingFile );
  spec->excludes( spec_file )->excludes( pla );
  spec_file->excludes( pla );
  cmd->add_flag( "--allow-empty-onset", opts.allow_empty_onset,
                 "accept problems whose minterms are all don't-cares (a constant-0 function)" );
  cmd->add_option( "--max-vars", opts.max_vars, "refuse problems with more variables than this" )
      ->capture_default_str();
}

std::string read_file( std::string const& path )
{
  std::ifstream file( path, std::ios::binary );
  if ( !file )
  {
    throw std::runtime_error( "cannot read file '" + path + "'" );
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

qmin::problem_spec load_problem( input_options const& opts )
{
  int const sources = int( !opts.spec_text.empty() ) + int( !opts.spec_file.empty() ) +
                      int( !opts.pla_file.empty() );
  if ( sources != 1 )
  {
    throw qmin::domain_error( "exactly one of --spec, --spec-file, or --pla must be given" );
  }

  qmin::problem_spec problem;
  if ( !opts.pla_file.empty() )
  {
    problem = qmin::parse_pla( read_file( opts.pla_file ), opts.max_vars );
  }
  else
  {
    auto const text = opts.spec_text.empty() ? read_file( opts.spec_file ) : opts.spec_text;
    problem = qmin::parse_minterm_spec( text, opts.allow_empty_onset );
  }
  if ( problem.num_vars > opts.max_vars )
  {
    throw qmin::capacity_error( "problem has " + std::to_string( problem.num_vars ) +
                                " variables, above the configured bound of " +
                                std::to_string( opts.max_vars ) + " (see --max-vars)" );
  }
  return problem;
}

qmin::variable_naming choose_naming( std::string const& request, uint32_t num_vars )
{
  if ( request == "letters" )
  {
    return { qmin::naming_style::letters };
  }
  if ( request == "indexed" )
  {
    return { qmin::naming_style::indexed };
  }
  /* auto: letters while they last */
  return { num_vars <= 26u ? qmin::naming_style::letters : qmin::naming_style::indexed };
}

std::string join_minterms( std::vector<uint64_t> const& minterms )
{
  std::string text;
  for ( auto const m : minterms )
  {
    if ( !text.empty() )
    {
      text += ',';
    }
    text += std::to_string( m );
  }
  return text;
}

void print_chart( std::ostream& os, qmin::pi_chart const& chart, std::string const& title )
{
  os << title << " (" << chart.columns.size() << " columns, " << chart.rows.size() << " rows)\n";
  if ( chart.columns.empty() )
  {
    return;
  }

  size_t label_width = 5u; /* room for "count" */
  for ( auto const& row : chart.rows )
  {
    label_width = std::max<size_t>( label_width, row.num_vars );
  }
  size_t number_width = 1u;
  for ( auto const c : chart.columns )
  {
    number_width = std::max( number_width, std::to_string( c ).size() );
  }

  auto pad = []( std::string text, size_t width ) {
    text.resize( std::max( text.size(), width ), ' ' );
    return text;
  };
  auto lead = []( std::string const& text, size_t width ) {
    return std::string( width - std::min( width, text.size() ), ' ' ) + text;
  };

  os << "  " << pad( "", label_width );
  for ( auto const c : chart.columns )
  {
    os << ' ' << lead( std::to_string( c ), number_width );
  }
  os << "\n";
  for ( size_t r = 0u; r < chart.rows.size(); ++r )
  {
    os << "  " << pad( qmin::to_string( chart.rows[r] ), label_width );
    for ( size_t c = 0u; c < chart.columns.size(); ++c )
    {
      os << ' ' << lead( chart.mark( r, c ) ? "x" : ".", number_width );
    }
    os << "\n";
  }
  os << "  " << pad( "count", label_width );
  for ( auto const count : chart.coverage_count )
  {
    os << ' ' << lead( std::to_string( count ), number_width );
  }
  os << "\n";
}

void print_trace( std::ostream& os, qmin::minimize_report const& report )
{
  for ( auto const& column : report.columns )
  {
    os << "column " << column.index << "\n";
    for ( auto const& group : column.groups )
    {
      os << "  [ones " << group.ones << "]\n";
      for ( auto const& entry : group.entries )
      {
        os << "    " << qmin::to_string( entry.cube ) << "  covers "
           << join_minterms( qmin::expand_minterms( entry.cube ) ) << ( entry.ticked ? "  *" : "" )
           << "\n";
      }
    }
  }

  os << "prime implicants (" << report.primes.size() << ")\n";
  for ( auto const& prime : report.primes )
  {
    os << "  " << qmin::to_string( prime ) << "  covers "
       << join_minterms( qmin::expand_minterms( prime ) ) << "\n";
  }

  print_chart( os, report.chart, "prime implicant chart" );

  os << "essential prime implicants (" << report.essentials.size() << ")\n";
  for ( auto const& essential : report.essentials )
  {
    os << "  " << qmin::to_string( essential ) << "\n";
  }

  print_chart( os, report.reduced, "reduced chart" );

  os << "selected from the reduced chart (" << report.selected.size() << ")\n";
  for ( auto const& selected : report.selected )
  {
    os << "  " << qmin::to_string( selected ) << "\n";
  }

  os << "cover (" << report.result.cost.terms << " terms, " << report.result.cost.literals
     << " literals)\n";
}

void print_cover( std::string const& format, qmin::minimize_report const& report,
                  std::string const& naming_request )
{
  if ( format == "expr" )
  {
    std::cout << qmin::emit_expression( report.result,
                                        choose_naming( naming_request, report.problem.num_vars ) )
              << "\n";
  }
  else if ( format == "cubes" )
  {
    for ( auto const& imp : report.result.implicants )
    {
      std::cout << qmin::to_string( imp ) << "\n";
    }
  }
  else if ( format == "pla" )
  {
    std::cout << qmin::emit_pla( report.result );
  }
  else
  {
    std::cout << qmin::emit_json( report ) << "\n";
  }
}

int run_minimize( input_options const& opts, std::string const& format, std::string const& naming,
                  bool show_trace )
{
  auto const problem = load_problem( opts );
  auto const report = qmin::minimize( problem );
  if ( show_trace )
  {
    print_trace( std::cout, report );
  }
  print_cover( format, report, naming );
  return 0;
}

int run_primes( input_options const& opts, std::string const& format, std::string const& naming )
{
  auto const problem = load_problem( opts );
  auto const primes = qmin::generate_primes( problem );

  if ( format == "cubes" )
  {
    for ( auto const& prime : primes )
    {
      std::cout << qmin::to_string( prime ) << "\n";
    }
  }
  else if ( format == "expr" )
  {
    auto const scheme = choose_naming( naming, problem.num_vars );
    for ( auto const& prime : primes )
    {
      std::cout << qmin::emit_expression( qmin::make_cover( problem.num_vars, { prime } ), scheme )
                << "\n";
    }
  }
  else if ( format == "pla" )
  {
    std::cout << qmin::emit_pla( qmin::make_cover( problem.num_vars, primes ) );
  }
  else
  {
    nlohmann::ordered_json root;
    root["vars"] = problem.num_vars;
    std::vector<std::string> strings;
    strings.reserve( primes.size() );
    for ( auto const& prime : primes )
    {
      strings.push_back( qmin::to_string( prime ) );
    }
    root["primes"] = strings;
    std::cout << root.dump( 2 ) << "\n";
  }
  return 0;
}

int run_verify( input_options const& opts )
{
  auto const problem = load_problem( opts );
  if ( problem.num_vars > qmin::oracle::default_enumeration_cap )
  {
    throw qmin::capacity_error(
        "verification runs brute-force oracles and is limited to " +
        std::to_string( qmin::oracle::default_enumeration_cap ) + " variables (the problem has " +
        std::to_string( problem.num_vars ) + ")" );
  }

  std::cout << "problem: " << problem.num_vars << " variables, " << problem.onset.size()
            << " onset minterms, " << problem.dontcare.size() << " don't-cares\n";

  auto const report = qmin::minimize( problem );
  bool failed = false;

  auto const expected_primes = qmin::oracle::naive_primes( problem );
  if ( report.primes == expected_primes )
  {
    std::cout << "primes: ok (" << report.primes.size() << " prime implicants)\n";
  }
  else
  {
    failed = true;
    std::cout << "primes: MISMATCH (minimizer found " << report.primes.size() << ", oracle found "
              << expected_primes.size() << ")\n";
    for ( auto const& prime : expected_primes )
    {
      if ( std::find( report.primes.begin(), report.primes.end(), prime ) == report.primes.end() )
      {
        std::cout << "  missing: " << qmin::to_string( prime ) << "\n";
      }
    }
    for ( auto const& prime : report.primes )
    {
      if ( std::find( expected_primes.begin(), expected_primes.end(), prime ) == expected_primes.end() )
      {
        std::cout << "  spurious: " << qmin::to_string( prime ) << "\n";
      }
    }
  }

  auto const verdict = qmin::oracle::check_equivalence( report.result, problem );
  if ( verdict.ok )
  {
    std::cout << "equivalence: ok\n";
  }
  else
  {
    failed = true;
    std::cout << "equivalence: FAILED (" << verdict.violations.size() << " violations)\n";
    size_t shown = 0u;
    for ( auto const& violation : verdict.violations )
    {
      if ( ++shown > 10u )
      {
        std::cout << "  ...\n";
        break;
      }
      if ( violation.kind == qmin::oracle::violation_kind::uncovered_onset )
      {
        std::cout << "  onset minterm " << violation.minterm << " is not covered\n";
      }
      else
      {
        std::cout << "  offset minterm " << violation.minterm << " is covered\n";
      }
    }
  }

  try
  {
    auto const minimum = qmin::oracle::exhaustive_min_cover_size( problem );
    if ( minimum == report.result.implicants.size() )
    {
      std::cout << "min-cover: ok (size " << minimum << ")\n";
    }
    else
    {
      failed = true;
      std::cout << "min-cover: MISMATCH (cover has " << report.result.implicants.size()
                << " terms, minimum is " << minimum << ")\n";
    }
  }
  catch ( qmin::capacity_error const& e )
  {
    std::cout << "min-cover: skipped (" << e.what() << ")\n";
  }

  std::cout << ( failed ? "verdict: FAILED\n" : "verdict: ok\n" );
  return failed ? 1 : 0;
}

/* hand-rolled generator so that seeded runs match across platforms */
struct splitmix64
{
  uint64_t state;

  uint64_t next()
  {
    uint64_t z = ( state += 0x9e3779b97f4a7c15ull );
    z = ( z ^ ( z >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
    z = ( z ^ ( z >> 27 ) ) * 0x94d049bb133111ebull;
    return z ^ ( z >> 31 );
  }
};

int run_bench( uint32_t vars, uint32_t trials, double density, uint64_t seed )
{
  using clock = std::chrono::steady_clock;
  auto const micros_between = []( clock::time_point a, clock::time_point b ) {
    return std::chrono::duration_cast<std::chrono::microseconds>( b - a ).count();
  };

  splitmix64 rng{ seed };
  uint64_t const threshold = uint64_t( density * 10000.0 + 0.5 );

  std::cout << "n,onset_density,primes,cover_size,micros_primes,micros_cover\n";
  for ( uint32_t trial = 0u; trial < trials; ++trial )
  {
    qmin::problem_spec problem;
    problem.num_vars = vars;
    for ( uint64_t m = 0u; m < ( uint64_t( 1 ) << vars ); ++m )
    {
      if ( rng.next() % 10000u < threshold )
      {
        problem.onset.push_back( m );
      }
    }

    size_t prime_count = 0u;
    size_t cover_size = 0u;
    long long micros_primes = 0;
    long long micros_cover = 0;
    if ( !problem.onset.empty() )
    {
      auto const t0 = clock::now();
      auto const primes = qmin::generate_primes( problem );
      auto const t1 = clock::now();
      auto const chart = qmin::build_chart( primes, problem );
      auto const extraction = qmin::extract_essentials( chart );
      auto const selected = qmin::solve_reduced( extraction.reduced );
      auto const t2 = clock::now();

      prime_count = primes.size();
      cover_size = extraction.essentials.size() + selected.size();
      micros_primes = micros_between( t0, t1 );
      micros_cover = micros_between( t1, t2 );
    }

    double const realized =
        double( problem.onset.size() ) / double( uint64_t( 1 ) << vars );
    char density_text[32];
    std::snprintf( density_text, sizeof density_text, "%.4f", realized );
    std::cout << vars << ',' << density_text << ',' << prime_count << ',' << cover_size << ','
              << micros_primes << ',' << micros_cover << "\n";
  }
  return 0;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "exact two-level minimization of single-output Boolean functions" };
  app.require_subcommand( 1 );

  std::vector<std::string> const formats{ "expr", "cubes", "pla", "json" };
  std::vector<std::string> const namings{ "auto", "letters", "indexed" };

  input_options minimize_opts;
  std::string minimize_format = "expr";
  std::string minimize_naming = "auto";
  bool show_trace = false;
  auto* minimize_cmd = app.add_subcommand( "minimize", "compute an exact minimum cover" );
  add_input_options( minimize_cmd, minimize_opts );
  minimize_cmd->add_option( "--format", minimize_format, "output format" )
      ->check( CLI::IsMember( formats ) )
      ->capture_default_str();
  minimize_cmd->add_option( "--naming", minimize_naming, "variable naming for expressions" )
      ->check( CLI::IsMember( namings ) )
      ->capture_default_str();
  minimize_cmd->add_flag( "--show-trace", show_trace, "print every stage of the run first" );

  input_options primes_opts;
  std::string primes_format = "cubes";
  std::string primes_naming = "auto";
  auto* primes_cmd = app.add_subcommand( "primes", "list all prime implicants" );
  add_input_options( primes_cmd, primes_opts );
  primes_cmd->add_option( "--format", primes_format, "output format" )
      ->check( CLI::IsMember( formats ) )
      ->capture_default_str();
  primes_cmd->add_option( "--naming", primes_naming, "variable naming for expressions" )
      ->check( CLI::IsMember( namings ) )
      ->capture_default_str();

  input_options verify_opts;
  auto* verify_cmd =
      app.add_subcommand( "verify", "re-check minimization results against brute-force oracles" );
  add_input_options( verify_cmd, verify_opts );

  uint32_t bench_vars = 10u;
  uint32_t bench_trials = 20u;
  double bench_density = 0.25;
  uint64_t bench_seed = 1u;
  auto* bench_cmd = app.add_subcommand( "bench", "time random problems and emit CSV" );
  bench_cmd->add_option( "--vars", bench_vars, "number of variables" )->capture_default_str();
  bench_cmd->add_option( "--trials", bench_trials, "number of random problems" )->capture_default_str();
  bench_cmd->add_option( "--density", bench_density, "probability of each minterm joining the onset" )
      ->check( CLI::Range( 0.0, 1.0 ) )
      ->capture_default_str();
  bench_cmd->add_option( "--seed", bench_seed, "random seed" )->capture_default_str();

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::CallForAllHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try
  {
    if ( app.got_subcommand( minimize_cmd ) )
    {
      return run_minimize( minimize_opts, minimize_format, minimize_naming, show_trace );
    }
    if ( app.got_subcommand( primes_cmd ) )
    {
      return run_primes( primes_opts, primes_format, primes_naming );
    }
    if ( app.got_subcommand( verify_cmd ) )
    {
      return run_verify( verify_opts );
    }
    return run_bench( bench_vars, bench_trials, bench_density, bench_seed );
  }
  catch ( qmin::capacity_error const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
