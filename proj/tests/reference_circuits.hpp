// Hand-built circuits for the worked examples, written out gate by gate.

#pragma once

#include <rmsynth/circuit.hpp>

namespace reference
{

using rmsynth::circuit;

// Direct method for x0x1x2 + x0x3x4 + x1x3x4 + x2x3x4 + x0x1x3.
inline circuit direct_example()
{
  circuit c( 6 );
  c.add_gate( { 0u, 1u, 2u }, 5 );
  c.add_gate( { 0u, 3u, 4u }, 5 );
  c.add_gate( { 1u, 3u, 4u }, 5 );
  c.add_gate( { 2u, 3u, 4u }, 5 );
  c.add_gate( { 0u, 1u, 3u }, 5 );
  return c;
}

// x3x4(x0 + x1 + x2) with a cascade into x2, then undone.
inline circuit single_group()
{
  circuit c( 6 );
  c.add_gate( { 0u }, 1 );
  c.add_gate( { 1u }, 2 );
  c.add_gate( { 2u, 3u, 4u }, 5 );
  c.add_gate( { 1u }, 2 );
  c.add_gate( { 0u }, 1 );
  return c;
}

// x2x3(x0 + x1) + x3x4(x0 + x1 + x2).
inline circuit nested_groups()
{
  circuit c( 6 );
  c.add_gate( { 0u }, 1 );
  c.add_gate( { 1u, 2u, 3u }, 5 );
  c.add_gate( { 1u }, 2 );
  c.add_gate( { 2u, 3u, 4u }, 5 );
  c.add_gate( { 1u }, 2 );
  c.add_gate( { 0u }, 1 );
  return c;
}

// The six-variable bent function of degree 3, 16 gates with 3 trailing restores.
inline circuit bent6()
{
  circuit c( 7 );
  c.add_gate( { 0u, 1u, 5u }, 6 );
  c.add_gate( { 2u, 3u, 5u }, 6 );
  c.add_gate( { 1u }, 3 );
  c.add_gate( { 3u }, 5 );
  c.add_gate( { 0u, 2u, 5u }, 6 );
  c.add_gate( { 3u }, 5 );
  c.add_gate( { 1u }, 3 );
  c.add_gate( { 0u }, 2 );
  c.add_gate( { 2u, 4u, 5u }, 6 );
  c.add_gate( { 2u }, 5 );
  c.add_gate( { 3u, 4u, 5u }, 6 );
  c.add_gate( { 3u }, 4 );
  c.add_gate( { 1u, 4u, 5u }, 6 );
  c.add_gate( { 3u }, 4 );
  c.add_gate( { 2u }, 5 );
  c.add_gate( { 0u }, 2 );
  return c;
}

// 4mod5, 9 gates with 3 trailing restores.
inline circuit four_mod_five()
{
  circuit c( 5 );
  c.add_gate( {}, 4 );
  c.add_gate( { 0u }, 2 );
  c.add_gate( { 1u }, 3 );
  c.add_gate( { 2u, 3u }, 4 );
  c.add_gate( { 2u }, 3 );
  c.add_gate( { 3u }, 4 );
  c.add_gate( { 2u }, 3 );
  c.add_gate( { 1u }, 3 );
  c.add_gate( { 0u }, 2 );
  return c;
}

} // namespace reference
