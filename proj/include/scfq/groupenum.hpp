#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "scfq/classlabel.hpp"

namespace scfq {

// all elements of GL_N(q); throws BoundExceeded when |GL_N(q)| > max_order
std::vector<MatFq> enumerate_group(const Fq& F, int N, i64 max_order);

// One fully enumerated group GL_N(q) with its class structure resolved:
// elements, element -> index, index -> class index (aligned with
// enumerate_classes order), class representatives drawn from the element
// list, inverses.  Built once and shared read-only.
struct GroupData {
    int N = 0;
    i64 order = 0;
    std::vector<ClassLabel> classes;
    std::vector<i64> sizes;                       // per class
    std::vector<MatFq> elements;
    std::vector<int> class_of;                    // per element
    std::vector<int> inverse_of;                  // element index of x^{-1}
    std::vector<int> rep_elem;                    // per class, an element index
    std::unordered_map<std::string, int> index;   // MatFq::key() -> element index
    int identity_class = -1;

    int element_index(const MatFq& g) const { return index.at(g.key()); }
};

std::shared_ptr<const GroupData> group_data(const Fq& F, int N, i64 max_order);

}  // namespace scfq
