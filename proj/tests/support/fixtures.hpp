#pragma once

#include <string>
#include <vector>

#include "ugkit/ultragraph.hpp"

namespace ugkit::fixture {

inline VertexId V(const std::string& name) { return VertexId::named(name); }

inline Ultragraph ten_vertex() {
    return make_graph({"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10"},
                      {{"e1", "v1", {"v2", "v3"}, {}},
                       {"e2", "v6", {"v3", "v4", "v5"}, {}},
                       {"e3", "v2", {"v7"}, {}},
                       {"e4", "v6", {"v10"}, {}},
                       {"e5", "v10", {"v8", "v9"}, {}}});
}

inline Ultragraph single_loop() { return make_graph({"v"}, {{"e", "v", {"v"}, {}}}); }

inline Ultragraph two_loops() { return make_graph({"v"}, {{"e", "v", {"v"}, {}}, {"f", "v", {"v"}, {}}}); }

inline Ultragraph single_edge() { return make_graph({"u", "w"}, {{"e", "u", {"w"}, {}}}); }

/// u -e-> {v} -f-> {w}
inline Ultragraph chain() { return make_graph({"u", "v", "w"}, {{"e", "u", {"v"}, {}}, {"f", "v", {"w"}, {}}}); }

/// A k-cycle c1 -> c2 -> ... -> ck -> c1 with edges a1..ak.
inline Ultragraph ring(std::size_t k) {
    std::vector<std::string> vs;
    std::vector<EdgeSpec> es;
    for (std::size_t i = 1; i <= k; ++i) vs.push_back("c" + std::to_string(i));
    for (std::size_t i = 1; i <= k; ++i)
        es.push_back({"a" + std::to_string(i), vs[i - 1], {vs[i % k]}, {}});
    return make_graph(vs, es);
}

/// u -a-> {v, w1, w_{>=3}},  v -b-> {w2, w_{>=4}}
inline Ultragraph tailed() {
    return make_graph({"u", "v"}, {{"a", "u", {"v", "w1"}, 3}, {"b", "v", {"w2"}, 4}}, TailSpec{"w", 1});
}

}  // namespace ugkit::fixture
