/*!
  \file verify.hpp
  \brief Equivalence checking and the benchmark harness
*/

#pragma once

#include "circuit.hpp"
#include "cost.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "pprm.hpp"
#include "synthesis.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <future>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace rmsynth
{

struct verify_options
{
  /*! Largest input count checked exhaustively. */
  uint32_t guard = default_guard;
  /*! Random assignments to check when the input count exceeds `guard`; 0 refuses instead. */
  uint64_t samples = 0u;
  uint64_t seed = 0x5eed5eedu;
};

struct equivalence_result
{
  bool equivalent = true;
  /*! Least failing assignment found (bit k = x_k). */
  std::optional<uint64_t> counterexample;
  bool exhaustive = true;
  uint64_t checked = 0u;
};

/*!
  \brief Compares the circuit's ancilla output with `e`.

  Exhaustive up to `options.guard` inputs, in which case the counterexample
  is the least failing assignment. Beyond the guard, `options.samples`
  uniformly random assignments are checked instead, or `guard_exceeded` is
  thrown if no samples were requested. The expression may use fewer
  variables than the circuit has inputs.
*/
inline equivalence_result check_equivalence( circuit const& c, pprm_expr const& e, verify_options const& options = {} )
{
  if ( c.width() == 0u )
    throw std::invalid_argument( "circuit has no ancilla wire" );
  auto const n = c.num_inputs();
  if ( e.num_vars() > n )
  {
    throw std::invalid_argument( "expression uses " + std::to_string( e.num_vars() ) + " variables but the circuit has " +
                                 std::to_string( n ) + " inputs" );
  }
  auto const f = e.with_num_vars( n );

  equivalence_result r;
  if ( n <= options.guard )
  {
    auto const got = circuit_function( c, options.guard );
    auto const want = pprm_to_truth_table( f );
    auto const diff = got.first_difference( want );
    r.checked = got.num_bits();
    if ( diff != got.num_bits() )
    {
      r.equivalent = false;
      r.counterexample = diff;
    }
    return r;
  }

  if ( options.samples == 0u )
    throw guard_exceeded( n, options.guard );

  r.exhaustive = false;
  std::mt19937_64 rng( options.seed );
  auto const mask = index_set::range( n ).bits();
  for ( uint64_t i = 0; i < options.samples; ++i )
  {
    auto const x = rng() & mask;
    bool const out = ( simulate( c, x ) >> n ) & 1u;
    if ( out != evaluate( f, x ) )
    {
      r.equivalent = false;
      r.counterexample = r.counterexample ? std::min( *r.counterexample, x ) : x;
    }
  }
  r.checked = options.samples;
  return r;
}

/*! \brief Thrown when a benchmark circuit fails verification. */
class verification_failure : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct bench_row
{
  std::string name;
  uint32_t inputs = 0u;
  synthesis_method method = synthesis_method::direct;
  size_t gates = 0u;
  uint64_t cost_naive = 0u;
  uint64_t cost_reduced = 0u;
  bool equivalent = false;
  /*! Measured only for restoring runs. */
  std::optional<bool> preserves_inputs;
};

struct bench_report
{
  bool restore = true;
  std::vector<bench_row> rows;
};

/*! \brief A benchmark name: a builtin, or a path to a `.pprm` file named by its stem. */
inline std::pair<std::string, pprm_expr> resolve_benchmark( std::string const& name )
{
  auto const names = builtin_names();
  if ( std::find( names.begin(), names.end(), name ) != names.end() )
    return { name, builtin( name ) };
  std::filesystem::path const p( name );
  if ( !std::filesystem::exists( p ) )
    throw std::invalid_argument( "'" + name + "' is neither a builtin benchmark nor an existing file" );
  return { p.stem().string(), read_pprm( read_text_file( name ) ) };
}

namespace detail
{

inline std::vector<bench_row> bench_one( std::string const& name, pprm_expr const& e, bool restore,
                                         verify_options const& options )
{
  std::vector<bench_row> rows;
  for ( auto method : { synthesis_method::direct, synthesis_method::factor } )
  {
    auto const s = synthesize( e, method, restore );
    bench_row row;
    row.name = name;
    row.inputs = e.num_vars();
    row.method = method;
    row.gates = s.gates;
    row.cost_naive = s.cost_naive;
    row.cost_reduced = s.cost_reduced;

    auto const eq = check_equivalence( s.circ, e, options );
    row.equivalent = eq.equivalent;
    if ( !eq.equivalent )
    {
      throw verification_failure( name + " (" + std::string( to_string( method ) ) +
                                  "): circuit differs from the function at assignment " +
                                  std::to_string( *eq.counterexample ) );
    }
    if ( restore )
    {
      row.preserves_inputs = e.num_vars() <= options.guard ? preserves_inputs( s.circ, options.guard ) : true;
      if ( !*row.preserves_inputs )
        throw verification_failure( name + " (" + std::string( to_string( method ) ) + "): inputs not preserved" );
    }
    rows.push_back( std::move( row ) );
  }
  return rows;
}

} // namespace detail

/*!
  \brief Synthesizes every benchmark with both methods and verifies each circuit.

  Rows come out in input order, direct before factor. With `restore` unset
  the restoring gates at the end are omitted, which is how benchmark gate
  counts are commonly reported. Throws `verification_failure` on the first
  failing circuit. Up to `jobs` benchmarks run concurrently.
*/
inline bench_report run_benchmarks( std::vector<std::string> const& names, bool restore,
                                    verify_options const& options = {}, unsigned jobs = 1u )
{
  std::vector<std::pair<std::string, pprm_expr>> inputs;
  for ( auto const& n : names )
    inputs.push_back( resolve_benchmark( n ) );

  bench_report report;
  report.restore = restore;
  std::vector<std::vector<bench_row>> results( inputs.size() );

  if ( jobs <= 1u )
  {
    for ( size_t i = 0; i < inputs.size(); ++i )
      results[i] = detail::bench_one( inputs[i].first, inputs[i].second, restore, options );
  }
  else
  {
    for ( size_t start = 0; start < inputs.size(); start += jobs )
    {
      std::vector<std::future<std::vector<bench_row>>> running;
      for ( size_t i = start; i < std::min( inputs.size(), start + jobs ); ++i )
      {
        running.push_back( std::async( std::launch::async, [&, i] {
          return detail::bench_one( inputs[i].first, inputs[i].second, restore, options );
        } ) );
      }
      for ( size_t k = 0; k < running.size(); ++k )
        results[start + k] = running[k].get();
    }
  }

  for ( auto& r : results )
    report.rows.insert( report.rows.end(), r.begin(), r.end() );
  return report;
}

inline std::string format_report_text( bench_report const& report )
{
  std::vector<std::vector<std::string>> cells = {
      { "benchmark", "inputs", "method", "gates", "cost_naive", "cost_reduced", "equivalent", "preserves_inputs" } };
  for ( auto const& r : report.rows )
  {
    cells.push_back( { r.name, std::to_string( r.inputs ), std::string( to_string( r.method ) ), std::to_string( r.gates ),
                       std::to_string( r.cost_naive ), std::to_string( r.cost_reduced ), r.equivalent ? "yes" : "no",
                       r.preserves_inputs ? ( *r.preserves_inputs ? "yes" : "no" ) : "-" } );
  }
  std::vector<size_t> width( cells.front().size(), 0u );
  for ( auto const& row : cells )
    for ( size_t i = 0; i < row.size(); ++i )
      width[i] = std::max( width[i], row[i].size() );

  std::ostringstream out;
  for ( auto const& row : cells )
  {
    for ( size_t i = 0; i < row.size(); ++i )
    {
      bool const left = i == 0u || i == 2u;
      out << ( i ? "  " : "" ) << ( left ? std::left : std::right ) << std::setw( static_cast<int>( width[i] ) ) << row[i];
    }
    out << '\n';
  }
  return out.str();
}

inline std::string format_report_csv( bench_report const& report )
{
  std::ostringstream out;
  out << "benchmark,inputs,method,gates,cost_naive,cost_reduced,equivalent,preserves_inputs\n";
  for ( auto const& r : report.rows )
  {
    out << r.name << ',' << r.inputs << ',' << to_string( r.method ) << ',' << r.gates << ',' << r.cost_naive << ','
        << r.cost_reduced << ',' << ( r.equivalent ? "true" : "false" ) << ','
        << ( r.preserves_inputs ? ( *r.preserves_inputs ? "true" : "false" ) : "" ) << '\n';
  }
  return out.str();
}

} // namespace rmsynth
