#include <catch2/catch_amalgamated.hpp>

#include "../tools/rmsynth_cli.hpp"
#include "oracles.hpp"

#include <filesystem>
#include <sstream>

using namespace rmsynth;

namespace
{

struct outcome
{
  int code;
  std::string out;
  std::string err;
};

outcome run_cli( std::vector<std::string> const& args )
{
  std::ostringstream out, err;
  auto const code = cli::run( args, out, err );
  return { code, out.str(), err.str() };
}

std::filesystem::path scratch()
{
  auto const dir = std::filesystem::temp_directory_path() / "rmsynth_cli_test";
  std::filesystem::create_directories( dir );
  return dir;
}

std::string file( std::string const& name, std::string const& content )
{
  auto const p = ( scratch() / name ).string();
  write_text_file( p, content );
  return p;
}

std::string last_line( std::string const& s )
{
  auto const trimmed = s.substr( 0, s.find_last_not_of( '\n' ) + 1u );
  return trimmed.substr( trimmed.find_last_of( '\n' ) + 1u );
}

} // namespace

TEST_CASE( "synth reports", "[cli][synth]" )
{
  auto const a = run_cli( { "synth", "--builtin", "4mod5", "--method", "factor", "--no-restore" } );
  CHECK( a.code == 0 );
  CHECK( last_line( a.out ) == "gates=6 cost_naive=10 cost_reduced=8 restored=false verified=true" );

  auto const b = run_cli( { "synth", "--builtin", "hbfr6", "--method", "direct" } );
  CHECK( b.code == 0 );
  CHECK( last_line( b.out ) == "gates=16 cost_naive=208 cost_reduced=208 restored=true verified=true" );

  auto const c = run_cli( { "synth", "--input", file( "empty.pprm", "vars: 3\n0\n" ), "--method", "direct" } );
  CHECK( c.code == 0 );
  CHECK( last_line( c.out ) == "gates=0 cost_naive=0 cost_reduced=0 restored=true verified=true" );

  auto const d = run_cli( { "synth", "--builtin", "hbfr6", "--cost", "naive" } );
  CHECK( last_line( d.out ) == "gates=16 cost_naive=88 restored=true verified=true" );
}

TEST_CASE( "synth writes a readable netlist", "[cli][synth]" )
{
  auto const out = ( scratch() / "hbfr6.real" ).string();
  auto const r = run_cli( { "synth", "--builtin", "hbfr6", "--out", out } );
  CHECK( r.code == 0 );
  CHECK( r.out.find( ".begin" ) == std::string::npos );
  auto const c = read_netlist( read_text_file( out ) );
  CHECK( c == synthesize( builtin( "hbfr6" ), synthesis_method::factor ).circ );
}

TEST_CASE( "synth is byte-for-byte deterministic", "[cli][synth]" )
{
  std::vector<std::string> const args = { "synth", "--builtin", "2of5" };
  CHECK( run_cli( args ).out == run_cli( args ).out );
}

TEST_CASE( "synth above the guard", "[cli][synth]" )
{
  auto const big = file( "big.pprm", "vars: 22\nx0*x21 + x3*x21 + x5\n" );
  CHECK( run_cli( { "synth", "--input", big } ).code == 2 );
  auto const r = run_cli( { "synth", "--input", big, "--samples", "500" } );
  CHECK( r.code == 0 );
  CHECK( last_line( r.out ).find( "verified=true" ) != std::string::npos );
  CHECK( run_cli( { "synth", "--input", big, "--guard", "22" } ).code == 0 );
}

TEST_CASE( "transform", "[cli][transform]" )
{
  std::string bits;
  for ( int x = 0; x < 32; ++x )
    bits += std::popcount( static_cast<unsigned>( x ) ) == 2 ? '1' : '0';
  auto const tt = file( "2of5.tt", "vars: 5\n" + bits + "\n" );
  auto const r = run_cli( { "transform", "--input", tt } );
  CHECK( r.code == 0 );
  CHECK( read_pprm( r.out ).size() == 20u );
  CHECK( read_pprm( r.out ) == builtin( "2of5" ) );

  auto const zero = run_cli( { "transform", "--input", file( "zero.tt", "vars: 3\n00000000\n" ) } );
  CHECK( zero.out == "vars: 3\n0\n" );

  auto const back = run_cli( { "transform", "--input", file( "2of5.pprm", r.out ) } );
  CHECK( back.out == "vars: 5\n" + bits + "\n" );
  auto const again = run_cli( { "transform", "--input", file( "2of5_again.tt", back.out ) } );
  CHECK( again.out == r.out );

  std::string want;
  for ( bool b : oracle::table( builtin( "4mod5" ) ) )
    want += b ? '1' : '0';
  CHECK( run_cli( { "transform", "--builtin", "4mod5" } ).out == "vars: 4\n" + want + "\n" );
}

TEST_CASE( "verify", "[cli][verify]" )
{
  auto const f = file( "five_products.pprm", "x2*x1*x0 + x4*x3*x0 + x4*x3*x1 + x4*x3*x2 + x3*x1*x0\n" );
  auto const c = file( "five_products.real", write_netlist( direct_synthesize( read_pprm( read_text_file( f ) ) ) ) );
  auto const ok = run_cli( { "verify", "--circuit", c, "--function", f } );
  CHECK( ok.code == 0 );
  CHECK( ok.out == "verified=true checked=32 exhaustive=true\n" );

  auto const tampered = file( "five_products_bad.real", ".numvars 6\n.variables x0 x1 x2 x3 x4 f\n.begin\n"
                                              "t4 x0 x1 x2 f\nt4 x0 x1 x3 f\nt4 x0 x3 x4 f\nt4 x1 x3 x4 f\n.end\n" );
  auto const bad = run_cli( { "verify", "--circuit", tampered, "--function", f } );
  CHECK( bad.code == 1 );
  CHECK( bad.out == "verified=false counterexample=00111\n" );
}

TEST_CASE( "bench", "[cli][bench]" )
{
  auto const r = run_cli( { "bench", "--no-restore", "--format", "csv" } );
  CHECK( r.code == 0 );
  CHECK( r.out == "benchmark,inputs,method,gates,cost_naive,cost_reduced,equivalent,preserves_inputs\n"
                  "4mod5,4,direct,9,25,25,true,\n"
                  "4mod5,4,factor,6,10,8,true,\n"
                  "2of5,5,direct,20,180,180,true,\n"
                  "2of5,5,factor,18,82,80,true,\n"
                  "hbfr6,6,direct,16,208,208,true,\n"
                  "hbfr6,6,factor,13,85,85,true,\n" );

  auto const text = run_cli( { "bench", "--jobs", "3" } );
  CHECK( text.code == 0 );
  CHECK( text.out.find( "preserves_inputs" ) != std::string::npos );
  CHECK( text.out.find( " no" ) == std::string::npos );

  auto const out = ( scratch() / "report.csv" ).string();
  CHECK( run_cli( { "bench", "4mod5", "--format", "csv", "--out", out } ).code == 0 );
  CHECK( read_text_file( out ).rfind( "benchmark,", 0 ) == 0u );
}

TEST_CASE( "usage and parse errors exit with 2", "[cli]" )
{
  CHECK( run_cli( {} ).code == 2 );
  CHECK( run_cli( { "frobnicate" } ).code == 2 );
  CHECK( run_cli( { "synth" } ).code == 2 );
  CHECK( run_cli( { "synth", "--builtin", "nope" } ).code == 2 );
  CHECK( run_cli( { "synth", "--builtin", "4mod5", "--method", "magic" } ).code == 2 );
  CHECK( run_cli( { "synth", "--builtin", "4mod5", "--input", "x.pprm" } ).code == 2 );
  CHECK( run_cli( { "synth", "--input", ( scratch() / "does_not_exist.pprm" ).string() } ).code == 2 );
  CHECK( run_cli( { "bench", "--format", "xml" } ).code == 2 );
  CHECK( run_cli( { "verify", "--function", file( "v.pprm", "x0\n" ) } ).code == 2 );

  auto const bad = run_cli( { "synth", "--input", file( "bad.pprm", "vars: 3\nx0 + x1\nx0 * * x2\n" ) } );
  CHECK( bad.code == 2 );
  CHECK( bad.err.find( "line 3" ) != std::string::npos );
  CHECK( bad.err.find( "column" ) != std::string::npos );

  CHECK( run_cli( { "--help" } ).code == 0 );
}
