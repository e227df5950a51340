#include <catch2/catch_amalgamated.hpp>

#include "reference_circuits.hpp"
#include "oracles.hpp"

#include <rmsynth/verify.hpp>

#include <filesystem>

using namespace rmsynth;

namespace
{

pprm_expr const five_products = parse_pprm( "x2*x1*x0 + x4*x3*x0 + x4*x3*x1 + x4*x3*x2 + x3*x1*x0" );

circuit without_gate( circuit const& c, size_t index )
{
  circuit r( c.width() );
  for ( size_t i = 0; i < c.num_gates(); ++i )
  {
    if ( i != index )
      r.add_gate( c.gates()[i] );
  }
  return r;
}

} // namespace

TEST_CASE( "check_equivalence accepts correct circuits", "[verify]" )
{
  auto const h = builtin( "hbfr6" );
  auto const r = check_equivalence( direct_synthesize( h ), h );
  CHECK( r.equivalent );
  CHECK( r.exhaustive );
  CHECK( r.checked == 64u );
  CHECK_FALSE( r.counterexample );

  CHECK( check_equivalence( circuit( 1 ), pprm_expr( 0, {} ) ).equivalent );
  CHECK( check_equivalence( circuit( 4 ), pprm_expr( 0, {} ) ).equivalent );
}

TEST_CASE( "a deleted gate yields the least counterexample", "[verify]" )
{
  auto const full = reference::direct_example();
  for ( size_t k = 0; k < full.num_gates(); ++k )
  {
    auto const r = check_equivalence( without_gate( full, k ), five_products );
    REQUIRE_FALSE( r.equivalent );
    REQUIRE( r.counterexample );

    // the missing product is the only difference, so its own variables form the least failing input
    auto const missing = full.gates()[k].controls.bits();
    CHECK( *r.counterexample == missing );
    CHECK( oracle::eval( five_products, *r.counterexample ) != oracle::function_of( without_gate( full, k ) )[*r.counterexample] );
  }
}

TEST_CASE( "check_equivalence argument checks", "[verify]" )
{
  CHECK_THROWS( check_equivalence( circuit( 3 ), five_products ) );
  CHECK_THROWS( check_equivalence( circuit( 0 ), pprm_expr( 0, {} ) ) );

  circuit wide( 24 );
  wide.add_gate( { 0u, 22u }, 23 );
  auto const e = parse_pprm( "x0*x22", 23 );
  CHECK_THROWS_AS( check_equivalence( wide, e ), guard_exceeded );

  verify_options o;
  o.samples = 2000;
  auto const r = check_equivalence( wide, e, o );
  CHECK( r.equivalent );
  CHECK_FALSE( r.exhaustive );
  CHECK( r.checked == 2000u );

  auto const bad = check_equivalence( wide, parse_pprm( "x0", 23 ), o );
  CHECK_FALSE( bad.equivalent );
  REQUIRE( bad.counterexample );
  CHECK( ( *bad.counterexample & 1u ) == 1u );
}

TEST_CASE( "benchmark rows for 4mod5, 2of5 and hbfr6", "[verify][bench]" )
{
  auto const report = run_benchmarks( { "4mod5", "2of5", "hbfr6" }, false );
  REQUIRE( report.rows.size() == 6u );

  auto row = [&]( std::string const& name, synthesis_method m ) {
    for ( auto const& r : report.rows )
      if ( r.name == name && r.method == m )
        return r;
    FAIL( "missing row" );
    return bench_row{};
  };

  CHECK( row( "4mod5", synthesis_method::direct ).gates == 9u );
  CHECK( row( "4mod5", synthesis_method::direct ).cost_naive == 25u );
  CHECK( row( "4mod5", synthesis_method::factor ).gates == 6u );
  CHECK( row( "4mod5", synthesis_method::factor ).cost_reduced == 8u );
  CHECK( row( "2of5", synthesis_method::direct ).gates == 20u );
  CHECK( row( "2of5", synthesis_method::direct ).cost_naive == 180u );
  CHECK( row( "hbfr6", synthesis_method::direct ).gates == 16u );
  CHECK( row( "hbfr6", synthesis_method::direct ).cost_naive == 208u );
  CHECK( row( "hbfr6", synthesis_method::factor ).gates == 13u );
  CHECK( row( "hbfr6", synthesis_method::factor ).cost_naive == 85u );

  for ( auto const& r : report.rows )
  {
    CHECK( r.equivalent );
    CHECK_FALSE( r.preserves_inputs );
  }
  CHECK( report.rows[0].name == "4mod5" );
  CHECK( report.rows[0].method == synthesis_method::direct );
  CHECK( report.rows[5].name == "hbfr6" );
}

TEST_CASE( "restoring benchmarks also check the inputs", "[verify][bench]" )
{
  auto const report = run_benchmarks( { "hbfr6", "4mod5" }, true );
  for ( auto const& r : report.rows )
  {
    REQUIRE( r.preserves_inputs );
    CHECK( *r.preserves_inputs );
  }
}

TEST_CASE( "benchmark rows do not depend on the job count", "[verify][bench]" )
{
  std::vector<std::string> names = { "hbfr6", "4mod5", "2of5", "hbfr6" };
  auto const serial = run_benchmarks( names, false );
  auto const parallel = run_benchmarks( names, false, {}, 3 );
  CHECK( format_report_csv( serial ) == format_report_csv( parallel ) );
  CHECK( format_report_text( serial ) == format_report_text( parallel ) );
}

TEST_CASE( "benchmarks from files", "[verify][bench]" )
{
  auto const dir = std::filesystem::temp_directory_path() / "rmsynth_verify_test";
  std::filesystem::create_directories( dir );
  auto const path = ( dir / "tiny.pprm" ).string();
  write_text_file( path, "vars: 3\nx0*x1 + x0*x2\n" );

  auto const report = run_benchmarks( { path }, true );
  REQUIRE( report.rows.size() == 2u );
  CHECK( report.rows[0].name == "tiny" );
  CHECK( report.rows[1].gates == 3u );

  CHECK_THROWS( run_benchmarks( { ( dir / "missing.pprm" ).string() }, true ) );
  CHECK_THROWS( run_benchmarks( { "5of2" }, true ) );
}

TEST_CASE( "report formats", "[verify][bench]" )
{
  auto const report = run_benchmarks( { "4mod5" }, false );
  CHECK( format_report_csv( report ) ==
         "benchmark,inputs,method,gates,cost_naive,cost_reduced,equivalent,preserves_inputs\n"
         "4mod5,4,direct,9,25,25,true,\n"
         "4mod5,4,factor,6,10,8,true,\n" );
  CHECK( format_report_text( report ) ==
         "benchmark  inputs  method  gates  cost_naive  cost_reduced  equivalent  preserves_inputs\n"
         "4mod5           4  direct      9          25            25         yes                 -\n"
         "4mod5           4  factor      6          10             8         yes                 -\n" );
}
