#include "psr/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace psr {

Simplex::Simplex(std::initializer_list<Vertex> verts) : Simplex(std::vector<Vertex>(verts)) {}

Simplex::Simplex(std::vector<Vertex> verts) : verts_(std::move(verts)) {
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
        throw std::invalid_argument("simplex has duplicate vertices");
    if (!verts_.empty() && verts_.front() < 0)
        throw std::invalid_argument("simplex has negative vertex id");
}

bool Simplex::has_vertex(Vertex v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::subset_of(const Simplex& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(), verts_.end());
}

Simplex Simplex::face_omitting(std::size_t k) const {
    std::vector<Vertex> v;
    v.reserve(verts_.size() - 1);
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (i != k) v.push_back(verts_[i]);
    Simplex s;
    s.verts_ = std::move(v);
    return s;
}

Simplex Simplex::with_vertex(Vertex v) const {
    Simplex s;
    s.verts_ = verts_;
    s.verts_.insert(std::lower_bound(s.verts_.begin(), s.verts_.end(), v), v);
    return s;
}

std::uint64_t Simplex::mask() const {
    std::uint64_t m = 0;
    for (Vertex v : verts_) m |= std::uint64_t{1} << v;
    return m;
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << ',';
        os << verts_[i];
    }
    os << '}';
    return os.str();
}

bool Simplex::operator<(const Simplex& o) const {
    if (verts_.size() != o.verts_.size()) return verts_.size() < o.verts_.size();
    return verts_ < o.verts_;
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (Vertex v : s.vertices())
        h ^= std::hash<Vertex>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

SimplicialComplex::SimplicialComplex(int vertex_count, bool insert_vertices) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    if (insert_vertices)
        for (Vertex v = 0; v < n_; ++v) insert_face(Simplex{v});
}

bool SimplicialComplex::is_full_vertex() const {
    if (by_dim_.empty()) return n_ == 0;
    return static_cast<int>(by_dim_[0].size()) == n_;
}

int SimplicialComplex::dim() const {
    for (int q = static_cast<int>(by_dim_.size()) - 1; q >= 0; --q)
        if (!by_dim_[q].empty()) return q;
    return -1;
}

void SimplicialComplex::insert_face(const Simplex& s) {
    if (s.empty()) return;
    if (s.max_vertex() >= n_)
        throw std::out_of_range("vertex id " + std::to_string(s.max_vertex()) +
                                " outside vertex set of size " + std::to_string(n_));
    if (contains(s)) return;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s.size() > 1) insert_face(s.face_omitting(k));
    if (static_cast<int>(by_dim_.size()) <= s.dim()) by_dim_.resize(s.dim() + 1);
    by_dim_[s.dim()].push_back(s);
    faces_.insert(s);
}

const std::vector<Simplex>& SimplicialComplex::faces_of_dim(int q) const {
    static const std::vector<Simplex> empty;
    if (q < 0 || q >= static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[q];
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
    std::vector<Simplex> out;
    out.reserve(faces_.size());
    for (const auto& level : by_dim_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

bool SimplicialComplex::is_facet(const Simplex& s) const {
    if (!contains(s)) return false;
    for (Vertex v = 0; v < n_; ++v)
        if (!s.has_vertex(v) && contains(s.with_vertex(v))) return false;
    return true;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (const auto& level : by_dim_)
        for (const auto& s : level)
            if (is_facet(s)) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> SimplicialComplex::minimal_nonfaces() const {
    if (n_ > kSubsetEnumerationCap)
        throw std::invalid_argument("minimal_nonfaces requires n <= " +
                                    std::to_string(kSubsetEnumerationCap) + ", got n = " +
                                    std::to_string(n_));
    std::vector<Simplex> out;
    const int max_size = std::min(n_, dim() + 2);
    // A minimal non-face has all proper subsets inside the complex, so its
    // cardinality is at most dim + 2.
    std::vector<Vertex> comb;
    std::function<void(int, int)> rec = [&](int start, int remaining) {
        if (remaining == 0) {
            Simplex s(comb);
            if (contains(s)) return;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (s.size() > 1 && !contains(s.face_omitting(k))) return;
            out.push_back(s);
            return;
        }
        for (int v = start; v <= n_ - remaining; ++v) {
            comb.push_back(v);
            rec(v + 1, remaining - 1);
            comb.pop_back();
        }
    };
    for (int k = 1; k <= max_size; ++k) rec(0, k);
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex SimplicialComplex::induced(std::uint64_t vertex_mask) const {
    std::vector<Vertex> relabel(n_, -1);
    int m = 0;
    for (Vertex v = 0; v < n_; ++v)
        if (vertex_mask >> v & 1) relabel[v] = m++;
    SimplicialComplex sub(m, /*insert_vertices=*/false);
    for (const auto& level : by_dim_)
        for (const auto& s : level) {
            if ((s.mask() & ~vertex_mask) != 0) continue;
            std::vector<Vertex> w;
            w.reserve(s.size());
            for (Vertex v : s.vertices()) w.push_back(relabel[v]);
            sub.insert_face(Simplex(std::move(w)));
        }
    return sub;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f{1};
    for (int q = 0; q <= dim(); ++q) f.push_back(static_cast<long long>(faces_of_dim(q).size()));
    return f;
}

bool SimplicialComplex::operator==(const SimplicialComplex& o) const {
    return n_ == o.n_ && faces_ == o.faces_;
}

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    SimplicialComplex c(n);
    std::vector<Vertex> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    if (n > 0) c.insert_face(Simplex(all));
    return c;
}

}  // namespace psr
