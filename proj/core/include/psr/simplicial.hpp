#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_set>
#include <vector>

namespace psr {

using Vertex = int;

/// A face: a strictly increasing list of non-negative vertex ids.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<Vertex> verts);
    explicit Simplex(std::vector<Vertex> verts);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    const std::vector<Vertex>& vertices() const { return verts_; }
    Vertex max_vertex() const { return verts_.back(); }

    bool has_vertex(Vertex v) const;
    bool subset_of(const Simplex& other) const;

    /// Codimension-1 face obtained by dropping the k-th vertex.
    Simplex face_omitting(std::size_t k) const;
    /// Coface obtained by inserting a vertex not already present.
    Simplex with_vertex(Vertex v) const;

    /// Bitmask of vertices; valid only when all ids are < 64.
    std::uint64_t mask() const;

    std::string to_string() const;

    bool operator==(const Simplex& o) const { return verts_ == o.verts_; }
    bool operator<(const Simplex& o) const;

private:
    std::vector<Vertex> verts_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const;
};

/// Abstract simplicial complex on vertex set {0, ..., n-1}.
///
/// The empty face is implicit. A complex may be "full-vertex" (every
/// singleton is a face) or live on a subset of its ambient vertex set,
/// as sublevel complexes of a filtration do.
class SimplicialComplex {
public:
    explicit SimplicialComplex(int vertex_count, bool insert_vertices = true);

    int vertex_count() const { return n_; }
    bool is_full_vertex() const;
    /// Max face dimension; -1 for the empty complex.
    int dim() const;
    std::size_t face_count() const { return faces_.size(); }
    bool is_empty() const { return faces_.empty(); }

    bool contains(const Simplex& s) const { return faces_.count(s) > 0; }

    /// Inserts s and all of its non-empty subsets. Idempotent.
    void insert_face(const Simplex& s);

    const std::vector<Simplex>& faces_of_dim(int q) const;
    std::vector<Simplex> all_faces() const;

    std::vector<Simplex> facets() const;
    bool is_facet(const Simplex& s) const;
    std::vector<Simplex> minimal_nonfaces() const;

    /// Restriction to the vertices set in `vertex_mask`, relabeled
    /// order-preservingly onto {0, ..., |W|-1}.
    SimplicialComplex induced(std::uint64_t vertex_mask) const;

    /// (f_{-1}, f_0, ..., f_{d-1}) with f_{-1} = 1.
    std::vector<long long> f_vector() const;

    bool operator==(const SimplicialComplex& o) const;

    static SimplicialComplex full_simplex(int n);

private:
    int n_ = 0;
    std::unordered_set<Simplex, SimplexHash> faces_;
    std::vector<std::vector<Simplex>> by_dim_;
};

/// Enumeration cap for operations that walk all vertex subsets.
inline constexpr int kSubsetEnumerationCap = 24;

}  // namespace psr
