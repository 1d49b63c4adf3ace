#include "scfq/groupenum.hpp"

#include <map>
#include <mutex>

#include "scfq/errors.hpp"
#include "scfq/parallel.hpp"

namespace scfq {

std::vector<MatFq> enumerate_group(const Fq& F, int N, i64 max_order) {
    i64 order = group_order(F, N);
    if (order > max_order) throw BoundExceeded("group order " + std::to_string(order) +
                                               " exceeds the configured bound");
    std::vector<MatFq> out;
    out.reserve(size_t(order));
    if (N == 0) {
        out.emplace_back(0, 0);
        return out;
    }
    // odometer over all q^(N^2) matrices, keeping the invertible ones
    MatFq g(N, N);
    std::vector<int> digits(N * N, 0);
    while (true) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) g.at(i, j) = Scalar(digits[i * N + j]);
        if (mat_invertible(F, g)) out.push_back(g);
        int pos = 0;
        while (pos < N * N && ++digits[pos] == F.q()) digits[pos++] = 0;
        if (pos == N * N) break;
    }
    return out;
}

std::shared_ptr<const GroupData> group_data(const Fq& F, int N, i64 max_order) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const GroupData>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({F.q(), N});
        if (it != cache.end()) {
            if (it->second->order > max_order)
                throw BoundExceeded("group order " + std::to_string(it->second->order) +
                                    " exceeds the configured bound");
            return it->second;
        }
    }

    auto gd = std::make_shared<GroupData>();
    gd->N = N;
    gd->order = group_order(F, N);
    gd->classes = enumerate_classes(F, N);
    gd->sizes.reserve(gd->classes.size());
    std::unordered_map<std::string, int> class_index;
    for (size_t i = 0; i < gd->classes.size(); ++i) {
        gd->sizes.push_back(class_size(F, gd->classes[i]));
        class_index[label_to_string(F, gd->classes[i])] = int(i);
        if (gd->classes[i].parts.empty() ||
            (gd->classes[i].parts.size() == 1 && deg(gd->classes[i].parts[0].first) == 1 &&
             gd->classes[i].parts[0].first[0] == F.neg(F.one()) &&
             partition_weight(gd->classes[i].parts[0].second) == N &&
             gd->classes[i].parts[0].second == Partition(N, 1)))
            gd->identity_class = int(i);
    }
    gd->elements = enumerate_group(F, N, max_order);
    for (size_t i = 0; i < gd->elements.size(); ++i) gd->index[gd->elements[i].key()] = int(i);

    gd->class_of.assign(gd->elements.size(), -1);
    par_for(gd->elements.size(), default_exec(), [&](size_t i) {
        gd->class_of[i] = class_index.at(label_to_string(F, class_label(F, gd->elements[i])));
    });

    gd->inverse_of.assign(gd->elements.size(), -1);
    gd->rep_elem.assign(gd->classes.size(), -1);
    for (size_t i = 0; i < gd->elements.size(); ++i) {
        gd->inverse_of[i] = gd->index.at(mat_inverse(F, gd->elements[i]).key());
        if (gd->rep_elem[gd->class_of[i]] < 0) gd->rep_elem[gd->class_of[i]] = int(i);
    }

    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace({F.q(), N}, gd);
    return it->second;
}

}  // namespace scfq
