/*!
  \file rmsynth_cli.hpp
  \brief Command-line front end: synth, transform, verify and bench
*/

#pragma once

#include <rmsynth/rmsynth.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace rmsynth::cli
{

enum exit_code : int
{
  ok = 0,
  verification_failed = 1,
  usage_error = 2
};

struct run_config
{
  std::string input;
  std::string builtin_name;
  int vars = -1;
  std::string method = "factor";
  bool no_restore = false;
  std::string cost = "both";
  std::string out;
  uint32_t guard = default_guard;
  uint64_t samples = 0u;
  unsigned jobs = 1u;
  std::string circuit_path;
  std::string function_path;
  std::string format = "text";
  std::vector<std::string> benchmarks;
};

class usage : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

namespace detail
{

inline bool is_truth_table_path( std::string const& path )
{
  return std::filesystem::path( path ).extension() == ".tt";
}

inline pprm_expr load_function( run_config const& cfg )
{
  if ( cfg.input.empty() == cfg.builtin_name.empty() )
    throw usage( "exactly one of --input and --builtin is required" );
  if ( !cfg.builtin_name.empty() )
  {
    auto e = builtin( cfg.builtin_name );
    if ( cfg.vars >= 0 )
    {
      if ( static_cast<uint32_t>( cfg.vars ) < e.num_vars() )
        throw usage( "--vars is smaller than the builtin's variable count" );
      e = e.with_num_vars( static_cast<uint32_t>( cfg.vars ) );
    }
    return e;
  }
  auto const text = read_text_file( cfg.input );
  if ( is_truth_table_path( cfg.input ) )
    return truth_table_to_pprm( read_truth_table( text ) );
  return read_pprm( text, cfg.vars );
}

inline verify_options options_of( run_config const& cfg )
{
  verify_options o;
  o.guard = cfg.guard;
  o.samples = cfg.samples;
  return o;
}

inline void emit_output( run_config const& cfg, std::string const& text, std::ostream& out )
{
  if ( cfg.out.empty() )
    out << text;
  else
    write_text_file( cfg.out, text );
}

inline std::string assignment_bits( uint64_t x, uint32_t n )
{
  std::string s;
  for ( uint32_t i = 0; i < n; ++i )
    s += ( ( x >> i ) & 1u ) ? '1' : '0';
  return s;
}

inline int cmd_synth( run_config const& cfg, std::ostream& out, std::ostream& err )
{
  auto const e = load_function( cfg );
  bool const restore = !cfg.no_restore;
  auto const method = parse_method( cfg.method );
  auto const s = synthesize( e, method, restore );
  auto const eq = check_equivalence( s.circ, e, options_of( cfg ) );

  emit_output( cfg, write_netlist( s.circ ), out );

  out << "gates=" << s.gates;
  if ( cfg.cost != "reduced" )
    out << " cost_naive=" << s.cost_naive;
  if ( cfg.cost != "naive" )
    out << " cost_reduced=" << s.cost_reduced;
  out << " restored=" << ( restore || method == synthesis_method::direct ? "true" : "false" )
      << " verified=" << ( eq.equivalent ? "true" : "false" ) << '\n';

  if ( !eq.equivalent )
  {
    err << "error: circuit differs from the function at x=" << assignment_bits( *eq.counterexample, e.num_vars() )
        << '\n';
    return verification_failed;
  }
  return ok;
}

inline int cmd_transform( run_config const& cfg, std::ostream& out )
{
  if ( cfg.input.empty() == cfg.builtin_name.empty() )
    throw usage( "exactly one of --input and --builtin is required" );
  if ( !cfg.input.empty() && is_truth_table_path( cfg.input ) )
  {
    emit_output( cfg, write_pprm( truth_table_to_pprm( read_truth_table( read_text_file( cfg.input ) ) ) ), out );
    return ok;
  }
  auto const e = load_function( cfg );
  if ( e.num_vars() > max_table_vars )
    throw usage( "truth tables are limited to " + std::to_string( max_table_vars ) + " variables" );
  emit_output( cfg, write_truth_table( pprm_to_truth_table( e ) ), out );
  return ok;
}

inline int cmd_verify( run_config const& cfg, std::ostream& out )
{
  if ( cfg.circuit_path.empty() )
    throw usage( "--circuit is required" );
  auto const c = read_netlist( read_text_file( cfg.circuit_path ) );

  run_config fcfg = cfg;
  if ( !cfg.function_path.empty() )
  {
    if ( !cfg.input.empty() )
      throw usage( "--function and --input are aliases; give only one" );
    fcfg.input = cfg.function_path;
  }
  auto const e = load_function( fcfg );
  auto const eq = check_equivalence( c, e, options_of( cfg ) );

  if ( eq.equivalent )
  {
    out << "verified=true checked=" << eq.checked << " exhaustive=" << ( eq.exhaustive ? "true" : "false" ) << '\n';
    return ok;
  }
  out << "verified=false counterexample=" << assignment_bits( *eq.counterexample, c.num_inputs() ) << '\n';
  return verification_failed;
}

inline int cmd_bench( run_config const& cfg, std::ostream& out )
{
  auto names = cfg.benchmarks;
  if ( names.empty() )
    names = { "4mod5", "2of5", "hbfr6" };
  auto const report = run_benchmarks( names, !cfg.no_restore, options_of( cfg ), std::max( 1u, cfg.jobs ) );
  emit_output( cfg, cfg.format == "csv" ? format_report_csv( report ) : format_report_text( report ), out );
  return ok;
}

} // namespace detail

/*! \brief Runs the tool on `args` (without the program name) and returns the exit code. */
inline int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Reed-Muller synthesis of multi-control-NOT circuits", "rmsynth" };
  app.require_subcommand( 1 );
  run_config cfg;

  auto add_source = [&]( CLI::App* sub ) {
    sub->add_option( "--input", cfg.input, "Expression (.pprm) or truth table (.tt) file" );
    sub->add_option( "--builtin", cfg.builtin_name, "Builtin benchmark" )->check( CLI::IsMember( builtin_names() ) );
    sub->add_option( "--vars", cfg.vars, "Number of variables" )->check( CLI::Range( 0, 64 ) );
  };
  auto add_checks = [&]( CLI::App* sub ) {
    sub->add_option( "--guard", cfg.guard, "Largest input count verified exhaustively" )->check( CLI::Range( 0, 30 ) );
    sub->add_option( "--samples", cfg.samples, "Random assignments to check above the guard" );
  };

  auto* synth = app.add_subcommand( "synth", "Synthesize a circuit and report its cost" );
  add_source( synth );
  add_checks( synth );
  synth->add_option( "--method", cfg.method, "Synthesis method" )->check( CLI::IsMember( { "direct", "factor" } ) );
  synth->add_flag( "--no-restore", cfg.no_restore, "Leave modified input wires unrestored" );
  synth->add_option( "--cost", cfg.cost, "Cost figures to report" )->check( CLI::IsMember( { "naive", "reduced", "both" } ) );
  synth->add_option( "--out", cfg.out, "Netlist output path" );

  auto* transform = app.add_subcommand( "transform", "Convert between expression and truth table" );
  add_source( transform );
  transform->add_option( "--out", cfg.out, "Output path" );

  auto* verify = app.add_subcommand( "verify", "Check a netlist against a function" );
  add_source( verify );
  add_checks( verify );
  verify->add_option( "--circuit", cfg.circuit_path, "Netlist file" );
  verify->add_option( "--function", cfg.function_path, "Expression or truth table file" );

  auto* bench = app.add_subcommand( "bench", "Run the benchmark table" );
  add_checks( bench );
  bench->add_option( "benchmarks", cfg.benchmarks, "Builtin names or .pprm files (default: 4mod5 2of5 hbfr6)" );
  bench->add_flag( "--no-restore", cfg.no_restore, "Omit the restoring gates" );
  bench->add_option( "--jobs", cfg.jobs, "Benchmarks run concurrently" )->check( CLI::PositiveNumber );
  bench->add_option( "--format", cfg.format, "Report format" )->check( CLI::IsMember( { "text", "csv" } ) );
  bench->add_option( "--out", cfg.out, "Report output path" );

  std::vector<std::string> argv_store;
  argv_store.reserve( args.size() + 1u );
  argv_store.push_back( "rmsynth" );
  argv_store.insert( argv_store.end(), args.begin(), args.end() );
  std::vector<char const*> argv;
  for ( auto const& a : argv_store )
    argv.push_back( a.c_str() );

  try
  {
    app.parse( static_cast<int>( argv.size() ), argv.data() );
  }
  catch ( CLI::ParseError const& e )
  {
    auto const code = app.exit( e, out, err );
    return code == 0 ? ok : usage_error;
  }

  try
  {
    if ( synth->parsed() )
      return detail::cmd_synth( cfg, out, err );
    if ( transform->parsed() )
      return detail::cmd_transform( cfg, out );
    if ( verify->parsed() )
      return detail::cmd_verify( cfg, out );
    return detail::cmd_bench( cfg, out );
  }
  catch ( verification_failure const& e )
  {
    err << "error: " << e.what() << '\n';
    return verification_failed;
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

} // namespace rmsynth::cli
