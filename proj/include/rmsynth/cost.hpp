/*!
  \file cost.hpp
  \brief Quantum cost of multi-control-NOT circuits

  Per-gate costs follow the usual table: 1 for NOT and Feynman gates, 5 for
  Toffoli, 13 for three controls. Beyond three controls the closed form
  2^(k+1) - 3 is used; it reproduces 5 and 13 but is an extrapolation, as no
  larger gate appears in the reference circuits.

  With `pair_reduction` enabled, a Toffoli gate T(a, b; t) next to a
  Feynman gate F(a; b) or F(b; a) forms a Peres pair costing 4 instead of
  5 + 1. Pairs are found by a single left-to-right greedy scan; the Feynman
  gate may sit on either side, separated only by gates sharing no wire with
  the Toffoli gate. Each gate belongs to at most one pair. The model only
  affects the cost figure; gates are never rewritten.
*/

#pragma once

#include "circuit.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rmsynth
{

/*! \brief Cost of a gate with `k` controls in the default table. */
constexpr uint64_t default_gate_cost( uint32_t k )
{
  if ( k <= 1u )
    return 1u;
  if ( k >= 63u )
    return ~uint64_t( 0 );
  return ( uint64_t( 1 ) << ( k + 1u ) ) - 3u;
}

struct cost_model
{
  /*! Entry `k` is the cost of a gate with `k` controls; missing entries use `default_gate_cost`. */
  std::vector<uint64_t> table = { 1u, 1u, 5u, 13u };
  bool pair_reduction = false;

  /*! Combined cost of a Toffoli/Feynman pair under `pair_reduction`. */
  uint64_t peres_cost = 4u;

  uint64_t gate_cost( uint32_t num_controls ) const
  {
    return num_controls < table.size() ? table[num_controls] : default_gate_cost( num_controls );
  }

  static cost_model naive() { return cost_model{}; }

  static cost_model reduced()
  {
    cost_model m;
    m.pair_reduction = true;
    return m;
  }
};

namespace detail
{

/*! F(a; b) completes a Peres pair with T(a, b; t) when {a, b} are the Toffoli controls. */
inline bool is_peres_partner( gate const& toffoli, gate const& feynman )
{
  return feynman.num_controls() == 1u && toffoli.controls.contains( feynman.target ) &&
         toffoli.controls.contains( feynman.controls.front() );
}

} // namespace detail

/*! \brief Indices (Toffoli, Feynman) of the pairs chosen by the greedy scan. */
inline std::vector<std::pair<size_t, size_t>> peres_pairs( circuit const& c )
{
  auto const& gates = c.gates();
  std::vector<bool> used( gates.size(), false );
  std::vector<std::pair<size_t, size_t>> pairs;

  for ( size_t i = 0; i < gates.size(); ++i )
  {
    if ( used[i] || gates[i].num_controls() != 2u )
      continue;
    auto const wires = gates[i].wires();

    auto probe = [&]( int step ) -> bool {
      for ( auto j = static_cast<std::ptrdiff_t>( i ) + step; j >= 0 && j < static_cast<std::ptrdiff_t>( gates.size() ); j += step )
      {
        auto const& g = gates[static_cast<size_t>( j )];
        if ( !g.wires().intersects( wires ) )
          continue;
        if ( !used[static_cast<size_t>( j )] && detail::is_peres_partner( gates[i], g ) )
        {
          used[i] = used[static_cast<size_t>( j )] = true;
          pairs.emplace_back( i, static_cast<size_t>( j ) );
          return true;
        }
        return false;
      }
      return false;
    };

    if ( !probe( -1 ) )
      probe( +1 );
  }
  return pairs;
}

inline uint64_t quantum_cost( circuit const& c, cost_model const& model = cost_model::naive() )
{
  uint64_t total = 0u;
  for ( auto const& g : c.gates() )
    total += model.gate_cost( g.num_controls() );

  if ( model.pair_reduction )
  {
    for ( auto [t, f] : peres_pairs( c ) )
    {
      auto const separate = model.gate_cost( c.gates()[t].num_controls() ) + model.gate_cost( c.gates()[f].num_controls() );
      if ( separate > model.peres_cost )
        total -= separate - model.peres_cost;
    }
  }
  return total;
}

} // namespace rmsynth
