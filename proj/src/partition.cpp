#include "covseg/partition.hpp"

#include <algorithm>
#include <functional>

namespace covseg {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (Int x : parts_)
        if (x < 0) throw DomainError("partition parts must be non-negative");
    std::sort(parts_.begin(), parts_.end(), std::greater<Int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Int Partition::size() const {
    Int s = 0;
    for (Int x : parts_) s = checked_add(s, x);
    return s;
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Composition::Composition(std::vector<Int> entries) : entries_(std::move(entries)) {
    for (Int x : entries_)
        if (x <= 0) throw DomainError("composition entries must be positive");
}

Int Composition::size() const {
    Int s = 0;
    for (Int x : entries_) s = checked_add(s, x);
    return s;
}

std::string Composition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

Partition transpose(const Partition& p) {
    std::vector<Int> t;
    if (!p.parts().empty()) {
        t.assign(static_cast<size_t>(p.parts().front()), 0);
        for (Int part : p.parts())
            for (Int j = 0; j < part; ++j) ++t[static_cast<size_t>(j)];
    }
    return Partition(std::move(t));
}

Partition sum(const Partition& p, const Partition& q) {
    const auto& a = p.parts();
    const auto& b = q.parts();
    std::vector<Int> r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
    return Partition(std::move(r));
}

bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw DomainError("incomparable sizes");
    Int sp = 0, sq = 0;
    size_t k = std::max(p.parts().size(), q.parts().size());
    for (size_t i = 0; i < k; ++i) {
        sp += i < p.parts().size() ? p.parts()[i] : 0;
        sq += i < q.parts().size() ? q.parts()[i] : 0;
        if (sp > sq) return false;
    }
    return true;
}

Partition s_col(Int p, Int n_alpha) {
    if (p < 1) throw DomainError("s_col requires a positive part");
    if (n_alpha < 1) throw DomainError("s_col requires n_alpha >= 1");
    Int a = p / n_alpha, b = p % n_alpha;
    std::vector<Int> parts(static_cast<size_t>(a), n_alpha);
    if (b > 0) parts.push_back(b);
    return Partition(std::move(parts));
}

Partition bv_dual(const Partition& p, Int n_alpha) {
    if (n_alpha < 1) throw DomainError("bv_dual requires n_alpha >= 1");
    Partition acc;
    for (Int part : p.parts()) acc = sum(acc, s_col(part, n_alpha));
    return acc;
}

} // namespace covseg
