#pragma once

// Free bigraded complexes over GF(2)[U,V] and maps between them.
//
// Gradings: a generator x has Maslov M(x) and Alexander A(x). U lowers M by 2
// and A by 1, V keeps M and raises A by 1. A differential term U^a V^b y out of
// x must satisfy M(y) = M(x) - 1 + 2a and A(y) = A(x) - b + a.

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace eqcfk {

struct Generator {
    std::string name;
    int maslov = 0;
    int alexander = 0;

    int grz() const { return maslov - 2 * alexander; }
    bool operator==(const Generator&) const = default;
};

// U^u V^v times generator `gen`
struct Mono {
    int gen = 0;
    int u = 0;
    int v = 0;
    auto operator<=>(const Mono&) const = default;
};

// GF(2)-sum of monomials, kept sorted with no repeats
using Poly = std::vector<Mono>;

void normalize(Poly& p);
Poly shifted(const Poly& p, int du, int dv);
Poly operator+(const Poly& a, const Poly& b);

class KnotComplex {
public:
    KnotComplex() = default;
    KnotComplex(std::vector<Generator> gens, std::vector<Poly> diff);

    std::size_t size() const { return gens_.size(); }
    const Generator& gen(int i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }
    const Poly& d(int i) const { return d_[i]; }
    const std::vector<Poly>& differential() const { return d_; }

    int index_of(std::string_view name) const;  // -1 if absent
    Poly d_of(const Poly& p) const;              // U,V-linear extension

    bool operator==(const KnotComplex& o) const { return gens_ == o.gens_ && d_ == o.d_; }

private:
    std::vector<Generator> gens_;
    std::vector<Poly> d_;
    std::unordered_map<std::string, int> index_;
};

using ComplexPtr = std::shared_ptr<const KnotComplex>;

inline ComplexPtr share(KnotComplex c) { return std::make_shared<const KnotComplex>(std::move(c)); }

struct Violation {
    std::string constraint;
    std::string where;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

ValidationReport validate_complex(const KnotComplex& c);

KnotComplex tensor(const KnotComplex& a, const KnotComplex& b);
KnotComplex mirror(const KnotComplex& c);
KnotComplex reverse(const KnotComplex& c);
KnotComplex direct_sum(const KnotComplex& a, const KnotComplex& b);
KnotComplex renamed(const KnotComplex& c, const std::vector<std::string>& names);
KnotComplex permuted(const KnotComplex& c, const std::vector<int>& perm);  // new index i holds old perm[i]

std::string pair_name(const std::string& a, const std::string& b);

// ----- chain maps -----

enum class MapClass { filtered, skew, unconstrained };

const char* to_string(MapClass c);
std::optional<MapClass> map_class_from_string(std::string_view s);

// A filtered map is U,V-linear with M(f x) = M(x) + maslov_shift and
// A(f x) = A(x) + alexander_shift. A skew map satisfies f(U z) = V f(z),
// f(V z) = U f(z), M(f x) = grz(x) + maslov_shift, A(f x) = -A(x) + alexander_shift.
struct ChainMap {
    ComplexPtr source;
    ComplexPtr target;
    std::vector<Poly> images;
    MapClass cls = MapClass::filtered;
    int maslov_shift = 0;
    int alexander_shift = 0;

    bool skew() const { return cls == MapClass::skew; }
};

bool same_shape(const ComplexPtr& a, const ComplexPtr& b);

ChainMap identity_map(const ComplexPtr& c);
ChainMap zero_map(const ComplexPtr& s, const ComplexPtr& t, MapClass cls, int ms, int as);
ChainMap differential_map(const ComplexPtr& c);

Poly apply(const ChainMap& f, const Poly& p);
ChainMap compose(const ChainMap& g, const ChainMap& f);  // g after f
ChainMap add(const ChainMap& f, const ChainMap& g);
bool equal(const ChainMap& f, const ChainMap& g);
bool is_chain_map(const ChainMap& f);

// exponents (a, b) of the unique admissible monomial x -> U^a V^b y, if any
std::optional<std::pair<int, int>> term_exponents(MapClass cls, int ms, int as, const Generator& x,
                                                  const Generator& y);

// chain-map equation plus the filtration/grading rules of the declared class
ValidationReport check_map(const ChainMap& f);

ChainMap tensor_maps(const ChainMap& f, const ChainMap& g, const ComplexPtr& src, const ComplexPtr& tgt);

ChainMap map_from_table(const ComplexPtr& s, const ComplexPtr& t, MapClass cls,
                        const std::vector<std::pair<std::string, std::vector<std::tuple<int, int, std::string>>>>& rows,
                        int ms = 0, int as = 0);

struct HomotopyResult {
    enum class Status { found, not_found_within_bound, disproved };
    Status status = Status::disproved;
    std::optional<ChainMap> homotopy;
    bool found() const { return status == Status::found; }
};

int default_degree_bound(const ChainMap& f, const ChainMap& g);
HomotopyResult are_homotopic(const ChainMap& f, const ChainMap& g, int degree_bound);
HomotopyResult are_homotopic(const ChainMap& f, const ChainMap& g);

}  // namespace eqcfk
