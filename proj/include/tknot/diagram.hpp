#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tknot {

struct Vec2 {
    long long u = 0;
    long long v = 0;
    Vec2 operator+(Vec2 o) const { return {u + o.u, v + o.v}; }
    Vec2 operator-(Vec2 o) const { return {u - o.u, v - o.v}; }
    Vec2 operator-() const { return {-u, -v}; }
    Vec2& operator+=(Vec2 o) { u += o.u; v += o.v; return *this; }
    bool is_zero() const { return u == 0 && v == 0; }
    auto operator<=>(const Vec2&) const = default;
};

inline Vec2 mod2(Vec2 w) { return {((w.u % 2) + 2) % 2, ((w.v % 2) + 2) % 2}; }
long long gcd_ll(long long a, long long b);
inline bool is_primitive(Vec2 w) { return gcd_ll(w.u, w.v) == 1; }

// Half-edge 4c+s is slot s (counterclockwise) at crossing c.
inline int crossing_of(int h) { return h / 4; }
inline int slot_of(int h) { return h % 4; }
inline int rot(int h, int k = 1) { return 4 * (h / 4) + (((h % 4) + k) % 4 + 4) % 4; }

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MultiComponentError : public DiagramError {
public:
    using DiagramError::DiagramError;
};

struct CombinatorialMap {
    int n = 0;
    std::vector<int> pair;
};

// Shadow on the torus. For n > 0, wind[h] is the class picked up when the
// edge is traversed from h to pair[h]; wind[pair[h]] == -wind[h].
struct Projection {
    int n = 0;
    std::vector<int> pair;
    std::vector<Vec2> wind;
    Vec2 circle{0, 1};

    CombinatorialMap map() const { return {n, pair}; }
    Vec2 edge_wind(int h) const { return wind[h]; }
    bool operator==(const Projection&) const = default;
};

struct Diagram {
    Projection proj;
    // bit c = 0: strand through slots {0,2} is over
    std::vector<int> over;

    int n() const { return proj.n; }
    bool operator==(const Diagram&) const = default;
};

struct FaceStructure {
    std::vector<std::vector<int>> faces;
    std::vector<int> face_of;
    std::vector<Vec2> boundary_class;  // empty until classified
};

enum class EmbeddingKind { cellular, annular, invalid };

struct Embedding {
    EmbeddingKind kind = EmbeddingKind::invalid;
    std::string reason;
    FaceStructure faces;
    // annular only: the two faces carrying nonzero boundary class
    std::array<int, 2> annular_faces{-1, -1};
    bool valid() const { return kind != EmbeddingKind::invalid; }
};

void validate_pairing(const CombinatorialMap& m);

// Closed straight-ahead walk from half-edge 0 as out/in half-edge pairs:
// out_0, in_1, out_1, in_2, ... of length 4n.
std::vector<int> trace_strand(const CombinatorialMap& m);
// Only the outgoing half-edges of the walk, length 2n.
std::vector<int> strand_out_darts(const CombinatorialMap& m);

FaceStructure trace_faces(const CombinatorialMap& m);

Embedding classify_embedding(const Projection& p);

// Sum of windings along out-darts h_0, h_1, ... where each h_i is followed
// by pair[h_i] and crossing(pair[h_i]) == crossing(h_{i+1}).
Vec2 cycle_class(const Projection& p, const std::vector<int>& out_darts);

Vec2 knot_class(const Diagram& d);
int writhe(const Diagram& d);
bool is_alternating(const Diagram& d);

Diagram mirror(const Diagram& d);
Projection reflect(const Projection& p);
Diagram reflect(const Diagram& d);
Diagram relabel(const Diagram& d, const std::vector<int>& perm, const std::vector<int>& shift);
Diagram gauge_shift(const Diagram& d, const std::vector<Vec2>& potential);
Diagram rebasis(const Diagram& d, const std::array<long long, 4>& m);

struct KeyFlags {
    bool reflect = true;
    bool mirror = false;
};

std::string canonical_key(const Projection& p, bool reflect = true);
std::string canonical_key(const Diagram& d, KeyFlags flags = {});

std::string encode_tkc(const Projection& p);
std::string encode_tkc(const Diagram& d);
// Returns a diagram; when the text has no over field, over is empty.
Diagram decode_tkc(std::string_view text, bool* has_over = nullptr);

// Structural checks: pairing, single strand, winding antisymmetry, embedding.
void validate(const Projection& p);
void validate(const Diagram& d);

// Unknot in a disk or essential circle.
Diagram circle_diagram(Vec2 cls);

}  // namespace tknot
