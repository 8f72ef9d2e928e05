#include "boxagg/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxagg::geometry {

void check_box(const Box& x) {
    if (x.empty()) throw std::invalid_argument("box must have at least one dimension");
    for (auto d : x) {
        if (d < 1) throw std::invalid_argument("box sides must be positive integers");
    }
}

void check_same_length(const Box& x, const Box& y) {
    check_box(x);
    check_box(y);
    if (x.size() != y.size()) {
        throw std::invalid_argument("incompatible boxes: dimension mismatch");
    }
}

BigInt attachment_count(const Box& x, const Box& y) {
    check_same_length(x, y);
    BigInt outer = 1, inner = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        outer *= x[i] + y[i] + 1;
        inner *= x[i] + y[i] - 1;
    }
    return outer - inner;
}

namespace {

// Enumerates the face s_face = extreme. A point is owned by the face of its
// first extreme coordinate, so coordinates before `face` stay strictly
// interior (1..m_j-1, nonempty since m_j >= 2) and later ones range freely.
void enumerate_face(const std::vector<std::int64_t>& m, std::size_t face,
                    std::int64_t extreme,
                    const std::function<void(const AttachmentParam&)>& visit) {
    const std::size_t l = m.size();
    AttachmentParam s(l);
    s[face] = extreme;

    std::vector<std::size_t> free;
    std::vector<std::int64_t> lo(l), hi(l);
    for (std::size_t j = 0; j < l; ++j) {
        if (j == face) continue;
        lo[j] = j < face ? 1 : 0;
        hi[j] = j < face ? m[j] - 1 : m[j];
        s[j] = lo[j];
        free.push_back(j);
    }

    while (true) {
        visit(s);
        std::size_t k = free.size();
        while (k > 0 && s[free[k - 1]] == hi[free[k - 1]]) {
            s[free[k - 1]] = lo[free[k - 1]];
            --k;
        }
        if (k == 0) break;
        ++s[free[k - 1]];
    }
}

}  // namespace

void for_each_parameter(const Box& x, const Box& y,
                        const std::function<void(const AttachmentParam&)>& visit) {
    check_same_length(x, y);
    const std::size_t l = x.size();
    std::vector<std::int64_t> m(l);
    for (std::size_t i = 0; i < l; ++i) m[i] = x[i] + y[i];

    for (std::size_t face = 0; face < l; ++face) {
        for (std::int64_t extreme : {std::int64_t{0}, m[face]}) {
            enumerate_face(m, face, extreme, visit);
        }
    }
}

std::vector<AttachmentParam> parameter_set(const Box& x, const Box& y) {
    std::vector<AttachmentParam> out;
    for_each_parameter(x, y, [&](const AttachmentParam& s) { out.push_back(s); });
    return out;
}

bool is_boundary_param(const Box& x, const Box& y, const AttachmentParam& s) {
    if (s.size() != x.size()) return false;
    bool extreme = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::int64_t m = x[i] + y[i];
        if (s[i] < 0 || s[i] > m) return false;
        if (s[i] == 0 || s[i] == m) extreme = true;
    }
    return extreme;
}

Box aggregate_at(const Box& x, const Box& y, const AttachmentParam& s) {
    check_same_length(x, y);
    if (!is_boundary_param(x, y, s)) {
        throw std::invalid_argument("attachment parameter is not a boundary point of R_{x+y}");
    }
    Box z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = std::max({x[i], y[i], x[i] + y[i] - s[i], s[i]});
    }
    return z;
}

}  // namespace boxagg::geometry
