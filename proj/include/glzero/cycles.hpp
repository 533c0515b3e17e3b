#pragma once
// Coherent cycles of an annular web: directed simple closed walks that wind
// once around the annulus and avoid the marked trace vertex. Each cycle
// carries the data its non-local relation needs: the thin edges its push-off
// crosses (sorted by side) and the number of enclosed trace vertices.
//
// Key structural facts used here: every edge is directed forward (position
// increasing) and only trace vertices connect position n+1 back to 0, so the
// winding number of a coherent walk equals the number of trace vertices on
// it. A once-winding simple cycle therefore contains exactly one trace
// vertex, at some height h0, and the enclosed trace vertices are exactly
// those at heights <= h0 (walking outward along the closure section from the
// annulus core, the inside/outside parity flips once, at h0).

#include <algorithm>
#include <vector>

#include "glzero/web.hpp"

namespace glzero::webs {

struct CoherentCycle {
  int trace_height = 0;      // h0, the unique trace vertex on the cycle
  int enclosed_traces = 0;   // = h0 with heights counted from 1 at the core
  std::vector<int> thin_edges;   // traversal order, starting after the trace
  std::vector<int> dumbbells;    // traversed dumbbells, traversal order
  std::vector<int> crossed_in;   // thin edges crossed at merge sides, sorted
  std::vector<int> crossed_out;  // thin edges crossed at split sides, sorted
};

inline std::vector<CoherentCycle> coherent_cycles(const AnnularWeb& w) {
  const int n = w.levels();
  // level -> dumbbell index
  std::vector<int> at_level(n + 2, -1);
  for (int d = 0; d < w.dumbbell_count(); ++d)
    at_level[w.dumbbells()[d].level] = d;

  std::vector<CoherentCycle> out;
  for (const TraceVertex& tv : w.traces()) {
    if (tv.marked) continue;
    const int h0 = tv.height;
    CoherentCycle cur;
    cur.trace_height = h0;
    cur.enclosed_traces = h0;
    std::vector<bool> used(w.dumbbell_count(), false);

    auto walk = [&](auto&& self, int eid) -> void {
      cur.thin_edges.push_back(eid);
      const ThinEdge& e = w.edge(eid);
      if (e.to_pos == n + 1) {
        // Passing the closure section: closes the cycle only at the start
        // height; any other height would be a second trace vertex.
        if (e.height == h0) {
          CoherentCycle done = cur;
          std::sort(done.crossed_in.begin(), done.crossed_in.end());
          std::sort(done.crossed_out.begin(), done.crossed_out.end());
          out.push_back(std::move(done));
        }
        cur.thin_edges.pop_back();
        return;
      }
      const int di = at_level[e.to_pos];
      const Dumbbell& d = w.dumbbells()[di];
      if (used[di]) {  // revisiting the merge vertex: not simple
        cur.thin_edges.pop_back();
        return;
      }
      used[di] = true;
      cur.dumbbells.push_back(di);
      const bool entered_low = (eid == d.in_lo);
      // The push-off runs on the outward side, so it crosses the companion
      // edge exactly when that edge lies above the cycle's own edge.
      if (entered_low) cur.crossed_in.push_back(d.in_hi);
      for (int next : {d.out_lo, d.out_hi}) {
        const bool exits_low = (next == d.out_lo);
        if (exits_low) cur.crossed_out.push_back(d.out_hi);
        self(self, next);
        if (exits_low) cur.crossed_out.pop_back();
      }
      if (entered_low) cur.crossed_in.pop_back();
      cur.dumbbells.pop_back();
      used[di] = false;
      cur.thin_edges.pop_back();
    };
    walk(walk, tv.out_edge);
  }
  return out;
}

}  // namespace glzero::webs
