#include "augtopo/corpus.hpp"

#include <functional>
#include <map>

namespace augtopo {

namespace {

Complex facets(std::vector<std::vector<int>> f) { return Complex::from_facets(f); }

const std::map<std::string, std::function<Complex()>>& registry() {
  static const std::map<std::string, std::function<Complex()>> table = [] {
    std::map<std::string, std::function<Complex()>> t;
    t["void"] = [] { return Complex::void_complex(); };
    t["empty"] = [] { return Complex::empty_simplex(); };
    t["point"] = [] { return facets({{1}}); };
    t["s0"] = [] { return facets({{1}, {2}}); };
    t["ball1"] = [] { return facets({{1, 2}}); };
    t["s1_3"] = [] { return facets({{1, 2}, {2, 3}, {1, 3}}); };
    t["s1_4"] = [] { return facets({{1, 3}, {1, 4}, {2, 3}, {2, 4}}); };
    t["theta"] = [] { return facets({{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}}); };
    t["square_product"] = [] { return product_ordered(facets({{1, 2}}), facets({{3, 4}})); };
    t["moebius5"] = [] { return facets({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}}); };
    t["cylinder"] = [] { return facets({{1, 2, 4}, {2, 4, 5}, {2, 3, 5}, {3, 5, 6}, {1, 3, 6}, {1, 4, 6}}); };
    t["rp2_6"] = [] {
      return facets({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                     {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
    };
    t["b2"] = [] { return join(corpus("s1_3"), corpus("point")); };
    t["b3"] = [] { return join(join(corpus("s1_3"), corpus("point")), corpus("point")); };
    t["s0_join_s0"] = [] { return join(corpus("s0"), corpus("s0")); };
    t["moebius5_cone"] = [] { return join(corpus("moebius5"), corpus("point")); };
    t["rp2_6_cone"] = [] { return join(corpus("rp2_6"), corpus("point")); };
    t["rp2_6_join_rp2_6"] = [] { return join(corpus("rp2_6"), corpus("rp2_6")); };
    return t;
  }();
  return table;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> table{{"rp2", "rp2_6"}, {"moebius", "moebius5"}};
  return table;
}

}  // namespace

Complex corpus(const std::string& name) {
  std::string key = name;
  if (auto a = aliases().find(key); a != aliases().end()) key = a->second;
  auto it = registry().find(key);
  if (it == registry().end()) throw TopologyError("unknown corpus complex '" + name + "'");
  return it->second();
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& kv : registry()) out.push_back(kv.first);
  return out;
}

}  // namespace augtopo
