#include "grnov/ring.hpp"

#include <stdexcept>

namespace grnov {

namespace {

std::vector<std::vector<Scalar>> identity_matrix(const Field& f, std::size_t d) {
    std::vector<std::vector<Scalar>> m(d, std::vector<Scalar>(d, Scalar::zero(f)));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = Scalar::one(f);
    return m;
}

std::vector<std::vector<Scalar>> mat_mul_k(const std::vector<std::vector<Scalar>>& a,
                                           const std::vector<std::vector<Scalar>>& b) {
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    const Field& f = a[0][0].field();
    std::vector<std::vector<Scalar>> r(n, std::vector<Scalar>(m, Scalar::zero(f)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][l] * b[l][j];
        }
    return r;
}

// Gauss-Jordan inverse; throws if singular.
std::vector<std::vector<Scalar>> mat_inverse_k(std::vector<std::vector<Scalar>> a) {
    std::size_t n = a.size();
    const Field& f = a[0][0].field();
    auto inv = identity_matrix(f, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::invalid_argument("matrix not invertible");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Scalar d = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] * d;
            inv[col][j] = inv[col][j] * d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Scalar c = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - c * a[col][j];
                inv[i][j] = inv[i][j] - c * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

Ring::Ring(const Ring& o)
    : kind_(o.kind_),
      field_(o.field_),
      pou_plus_(o.pou_plus_),
      pou_minus_(o.pou_minus_),
      dim_(o.dim_),
      one_(o.one_),
      strc_(o.strc_),
      aut_(o.aut_),
      aut_inv_(o.aut_inv_),
      names_(o.names_),
      degrees_(o.degrees_),
      relations_(o.relations_),
      groebner_(o.groebner_) {}

RingPtr Ring::make_laurent(const Field& f) {
    auto r = std::make_shared<Ring>();
    r->kind_ = Kind::laurent;
    r->field_ = f;
    Homog t{1, Scalar::one(f)};
    Homog tinv{-1, Scalar::one(f)};
    r->pou_plus_ = Partition{1, {PartitionPair{t, tinv}}};
    r->pou_minus_ = Partition{-1, {PartitionPair{tinv, t}}};
    return r;
}

RingPtr Ring::make_twisted(const Field& f, std::size_t dim, std::vector<Scalar> one,
                           std::vector<std::vector<std::vector<Scalar>>> strc,
                           std::vector<std::vector<Scalar>> aut) {
    if (dim == 0) throw std::invalid_argument("twisted ring: dim must be positive");
    if (one.size() != dim || strc.size() != dim || aut.size() != dim)
        throw std::invalid_argument("twisted ring: inconsistent dimensions");
    for (const auto& row : strc) {
        if (row.size() != dim) throw std::invalid_argument("twisted ring: bad structure constants");
        for (const auto& v : row)
            if (v.size() != dim) throw std::invalid_argument("twisted ring: bad structure constants");
    }
    auto r = std::make_shared<Ring>();
    r->kind_ = Kind::twisted_laurent;
    r->field_ = f;
    r->dim_ = dim;
    r->one_ = std::move(one);
    r->strc_ = std::move(strc);
    r->aut_ = std::move(aut);
    r->aut_inv_ = mat_inverse_k(r->aut_);

    auto basis = [&](std::size_t i) {
        std::vector<Scalar> v(dim, Scalar::zero(f));
        v[i] = Scalar::one(f);
        return v;
    };
    // unit axiom on basis elements
    for (std::size_t i = 0; i < dim; ++i) {
        if (r->r0_mul(r->one_, basis(i)) != basis(i) || r->r0_mul(basis(i), r->one_) != basis(i))
            throw std::invalid_argument("twisted ring: declared unit is not the identity");
    }
    // associativity on basis triples
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                auto l = r->r0_mul(r->r0_mul(basis(i), basis(j)), basis(k));
                auto q = r->r0_mul(basis(i), r->r0_mul(basis(j), basis(k)));
                if (l != q) throw std::invalid_argument("twisted ring: structure constants not associative");
            }
    // automorphism respects product and unit
    auto apply = [&](const std::vector<Scalar>& v) { return r->apply_aut(r->aut_, v); };
    if (apply(r->one_) != r->one_)
        throw std::invalid_argument("twisted ring: automorphism does not fix the unit");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            auto l = apply(r->r0_mul(basis(i), basis(j)));
            auto q = r->r0_mul(apply(basis(i)), apply(basis(j)));
            if (l != q) throw std::invalid_argument("twisted ring: matrix is not an algebra automorphism");
        }

    Homog s{1, r->one_};
    Homog sinv{-1, r->one_};
    r->pou_plus_ = Partition{1, {PartitionPair{s, sinv}}};
    r->pou_minus_ = Partition{-1, {PartitionPair{sinv, s}}};
    return r;
}

RingPtr Ring::make_graded_quotient_unvalidated(const Field& f, std::vector<std::string> names,
                                               std::vector<int> degrees,
                                               std::vector<MultiPoly> relations) {
    if (names.size() != degrees.size())
        throw std::invalid_argument("graded quotient: names/degrees mismatch");
    auto r = std::make_shared<Ring>();
    r->kind_ = Kind::graded_quotient;
    r->field_ = f;
    r->names_ = std::move(names);
    r->degrees_ = std::move(degrees);
    for (const auto& rel : relations) {
        if (!rel.homogeneous_degree(r->degrees_))
            throw std::invalid_argument("graded quotient: relation is not homogeneous");
    }
    r->relations_ = relations;
    r->groebner_ = buchberger(relations);
    for (const auto& g : r->groebner_) {
        if (!g.homogeneous_degree(r->degrees_))
            throw std::invalid_argument("graded quotient: Groebner completion lost homogeneity");
    }
    return r;
}

RingPtr Ring::make_graded_quotient(const Field& f, std::vector<std::string> names,
                                   std::vector<int> degrees, std::vector<MultiPoly> relations,
                                   Partition pou_plus, Partition pou_minus, bool check_partitions) {
    RingPtr base = make_graded_quotient_unvalidated(f, std::move(names), std::move(degrees),
                                                    std::move(relations));
    auto r = std::const_pointer_cast<Ring>(base);
    r->pou_plus_ = std::move(pou_plus);
    r->pou_minus_ = std::move(pou_minus);
    if (r->pou_plus_.n != 1 || r->pou_minus_.n != -1)
        throw std::invalid_argument("graded quotient: partitions must have types (1,-1) and (-1,1)");
    if (check_partitions) {
        auto check = verify_partition(*r, r->pou_plus_);
        if (!check.ok) throw std::invalid_argument("graded quotient: pou_plus invalid: " + check.message);
        check = verify_partition(*r, r->pou_minus_);
        if (!check.ok)
            throw std::invalid_argument("graded quotient: pou_minus invalid: " + check.message);
    }
    return r;
}

bool Ring::same(const Ring& o) const {
    if (kind_ != o.kind_ || !(field_ == o.field_)) return false;
    switch (kind_) {
        case Kind::laurent:
            return true;
        case Kind::twisted_laurent:
            return dim_ == o.dim_ && one_ == o.one_ && strc_ == o.strc_ && aut_ == o.aut_;
        case Kind::graded_quotient: {
            if (names_ != o.names_ || degrees_ != o.degrees_) return false;
            if (relations_.size() != o.relations_.size()) return false;
            for (std::size_t i = 0; i < relations_.size(); ++i)
                if (!(relations_[i] == o.relations_[i])) return false;
            return true;
        }
    }
    return false;
}

std::vector<Scalar> Ring::r0_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    std::vector<Scalar> r(dim_, Scalar::zero(field_));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            const auto& e = strc_[i][j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!e[k].is_zero()) r[k] = r[k] + c * e[k];
        }
    }
    return r;
}

std::vector<Scalar> Ring::apply_aut(const std::vector<std::vector<Scalar>>& m,
                                    const std::vector<Scalar>& v) const {
    std::vector<Scalar> r(dim_, Scalar::zero(field_));
    for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < dim_; ++i)
            if (!m[i][j].is_zero()) r[i] = r[i] + m[i][j] * v[j];
    }
    return r;
}

const std::vector<std::vector<Scalar>>& Ring::aut_power(long n) const {
    std::lock_guard<std::mutex> lk(cache_mutex_);
    auto it = aut_power_cache_.find(n);
    if (it != aut_power_cache_.end()) return it->second;
    std::vector<std::vector<Scalar>> m = identity_matrix(field_, dim_);
    const auto& step = n >= 0 ? aut_ : aut_inv_;
    for (long i = 0; i < (n >= 0 ? n : -n); ++i) m = mat_mul_k(step, m);
    return aut_power_cache_.emplace(n, std::move(m)).first->second;
}

MultiPoly Ring::normal_form(const MultiPoly& p) const {
    if (kind_ != Kind::graded_quotient)
        throw std::invalid_argument("normal_form: ring is not a graded quotient");
    return poly_normal_form(p, groebner_);
}

Homog Ring::h_zero(int degree) const {
    switch (kind_) {
        case Kind::laurent:
            return Homog{degree, Scalar::zero(field_)};
        case Kind::twisted_laurent:
            return Homog{degree, std::vector<Scalar>(dim_, Scalar::zero(field_))};
        case Kind::graded_quotient:
            return Homog{degree, MultiPoly::zero()};
    }
    throw std::logic_error("unreachable");
}

Homog Ring::h_one() const {
    switch (kind_) {
        case Kind::laurent:
            return Homog{0, Scalar::one(field_)};
        case Kind::twisted_laurent:
            return Homog{0, one_};
        case Kind::graded_quotient:
            return Homog{0, MultiPoly::constant(names_.size(), Scalar::one(field_))};
    }
    throw std::logic_error("unreachable");
}

Homog Ring::h_from_coeff(int degree, const Scalar& c) const {
    if (kind_ != Kind::laurent) throw std::invalid_argument("h_from_coeff: not a Laurent ring");
    return Homog{degree, c};
}

Homog Ring::h_from_coords(int degree, std::vector<Scalar> coords) const {
    if (kind_ != Kind::twisted_laurent) throw std::invalid_argument("h_from_coords: not twisted");
    if (coords.size() != dim_) throw std::invalid_argument("h_from_coords: bad dimension");
    return Homog{degree, std::move(coords)};
}

Homog Ring::h_from_poly(int degree, const MultiPoly& p) const {
    if (kind_ != Kind::graded_quotient) throw std::invalid_argument("h_from_poly: not a quotient ring");
    MultiPoly nf = normal_form(p);
    auto d = nf.homogeneous_degree(degrees_);
    if (!d) throw std::invalid_argument("h_from_poly: polynomial is not homogeneous");
    if (!nf.is_zero() && *d != degree)
        throw std::invalid_argument("h_from_poly: polynomial has degree " + std::to_string(*d) +
                                    ", expected " + std::to_string(degree));
    return Homog{degree, std::move(nf)};
}

bool Ring::h_is_zero(const Homog& a) const {
    switch (kind_) {
        case Kind::laurent:
            return std::get<Scalar>(a.payload).is_zero();
        case Kind::twisted_laurent: {
            for (const auto& c : std::get<std::vector<Scalar>>(a.payload))
                if (!c.is_zero()) return false;
            return true;
        }
        case Kind::graded_quotient:
            return std::get<MultiPoly>(a.payload).is_zero();
    }
    throw std::logic_error("unreachable");
}

bool Ring::h_eq(const Homog& a, const Homog& b) const {
    if (a.degree != b.degree) return h_is_zero(a) && h_is_zero(b);
    return a.payload == b.payload;
}

Homog Ring::h_add(const Homog& a, const Homog& b) const {
    if (a.degree != b.degree) {
        if (h_is_zero(a)) return b;
        if (h_is_zero(b)) return a;
        throw std::invalid_argument("h_add: degree mismatch");
    }
    switch (kind_) {
        case Kind::laurent:
            return Homog{a.degree, std::get<Scalar>(a.payload) + std::get<Scalar>(b.payload)};
        case Kind::twisted_laurent: {
            auto r = std::get<std::vector<Scalar>>(a.payload);
            const auto& o = std::get<std::vector<Scalar>>(b.payload);
            for (std::size_t i = 0; i < dim_; ++i) r[i] = r[i] + o[i];
            return Homog{a.degree, std::move(r)};
        }
        case Kind::graded_quotient:
            return Homog{a.degree, std::get<MultiPoly>(a.payload) + std::get<MultiPoly>(b.payload)};
    }
    throw std::logic_error("unreachable");
}

Homog Ring::h_neg(const Homog& a) const { return h_scale(a, -Scalar::one(field_)); }

Homog Ring::h_scale(const Homog& a, const Scalar& c) const {
    switch (kind_) {
        case Kind::laurent:
            return Homog{a.degree, std::get<Scalar>(a.payload) * c};
        case Kind::twisted_laurent: {
            auto r = std::get<std::vector<Scalar>>(a.payload);
            for (auto& x : r) x = x * c;
            return Homog{a.degree, std::move(r)};
        }
        case Kind::graded_quotient:
            return Homog{a.degree, std::get<MultiPoly>(a.payload).scaled(c)};
    }
    throw std::logic_error("unreachable");
}

Homog Ring::h_mul(const Homog& a, const Homog& b) const {
    int d = a.degree + b.degree;
    switch (kind_) {
        case Kind::laurent:
            return Homog{d, std::get<Scalar>(a.payload) * std::get<Scalar>(b.payload)};
        case Kind::twisted_laurent: {
            // (a s^m)(b s^n) = a phi^m(b) s^{m+n}
            const auto& av = std::get<std::vector<Scalar>>(a.payload);
            const auto& bv = std::get<std::vector<Scalar>>(b.payload);
            return Homog{d, r0_mul(av, apply_aut(aut_power(a.degree), bv))};
        }
        case Kind::graded_quotient:
            return Homog{d, normal_form(std::get<MultiPoly>(a.payload) * std::get<MultiPoly>(b.payload))};
    }
    throw std::logic_error("unreachable");
}

std::string Ring::h_to_string(const Homog& a) const {
    std::string deg = "[" + std::to_string(a.degree) + "]";
    switch (kind_) {
        case Kind::laurent:
            return std::get<Scalar>(a.payload).to_string() + deg;
        case Kind::twisted_laurent: {
            std::string s = "(";
            const auto& v = std::get<std::vector<Scalar>>(a.payload);
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ",";
                s += v[i].to_string();
            }
            return s + ")" + deg;
        }
        case Kind::graded_quotient:
            return std::get<MultiPoly>(a.payload).to_string(names_) + deg;
    }
    throw std::logic_error("unreachable");
}

std::size_t Ring::component_dim() const {
    switch (kind_) {
        case Kind::laurent:
            return 1;
        case Kind::twisted_laurent:
            return dim_;
        case Kind::graded_quotient:
            throw std::invalid_argument("component_dim: components are infinite-dimensional");
    }
    throw std::logic_error("unreachable");
}

std::vector<Scalar> Ring::h_coords(const Homog& a) const {
    switch (kind_) {
        case Kind::laurent:
            return {std::get<Scalar>(a.payload)};
        case Kind::twisted_laurent:
            return std::get<std::vector<Scalar>>(a.payload);
        case Kind::graded_quotient:
            throw std::invalid_argument("h_coords: components are infinite-dimensional");
    }
    throw std::logic_error("unreachable");
}

Homog Ring::h_from_component_coords(int degree, const std::vector<Scalar>& coords) const {
    switch (kind_) {
        case Kind::laurent:
            return Homog{degree, coords.at(0)};
        case Kind::twisted_laurent:
            return Homog{degree, coords};
        case Kind::graded_quotient:
            throw std::invalid_argument("h_from_component_coords: not component-finite");
    }
    throw std::logic_error("unreachable");
}

std::vector<std::vector<Scalar>> Ring::left_mul_matrix(const Homog& a, int k) const {
    std::size_t d = component_dim();
    std::vector<std::vector<Scalar>> m(d, std::vector<Scalar>(d, Scalar::zero(field_)));
    if (kind_ == Kind::laurent) {
        m[0][0] = std::get<Scalar>(a.payload);
        return m;
    }
    // column j: coords of a * phi^{deg a}(e_j) in R_{k + deg a}; the source
    // basis of R_k is e_j s^k, giving (a s^h)(e_j s^k) = a phi^h(e_j) s^{h+k}
    (void)k;
    const auto& av = std::get<std::vector<Scalar>>(a.payload);
    const auto& phis = aut_power(a.degree);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Scalar> ej(d, Scalar::zero(field_));
        ej[j] = Scalar::one(field_);
        auto col = r0_mul(av, apply_aut(phis, ej));
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
    }
    return m;
}

std::vector<std::vector<Scalar>> Ring::right_mul_matrix(const Homog& a, int k) const {
    std::size_t d = component_dim();
    std::vector<std::vector<Scalar>> m(d, std::vector<Scalar>(d, Scalar::zero(field_)));
    if (kind_ == Kind::laurent) {
        m[0][0] = std::get<Scalar>(a.payload);
        return m;
    }
    // (e_j s^k)(a s^h) = e_j phi^k(a) s^{k+h}
    const auto& av = std::get<std::vector<Scalar>>(a.payload);
    auto twisted = apply_aut(aut_power(k), av);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Scalar> ej(d, Scalar::zero(field_));
        ej[j] = Scalar::one(field_);
        auto col = r0_mul(ej, twisted);
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
    }
    return m;
}

const Partition& Ring::partition(int n) const {
    {
        std::lock_guard<std::mutex> lk(cache_mutex_);
        auto it = partition_cache_.find(n);
        if (it != partition_cache_.end()) return it->second;
    }
    Partition p = derive_partition(*this, n);
    std::lock_guard<std::mutex> lk(cache_mutex_);
    return partition_cache_.emplace(n, std::move(p)).first->second;
}

RingPtr Ring::reversed() const {
    auto swap_pou = [this](const Partition& src, int new_n) {
        Partition p;
        p.n = new_n;
        for (const auto& pr : src.pairs) {
            Homog u = pr.u, v = pr.v;
            u.degree = -u.degree;
            v.degree = -v.degree;
            p.pairs.push_back(PartitionPair{u, v});
        }
        return p;
    };
    auto r = std::make_shared<Ring>(*this);
    // caches do not transfer
    r->partition_cache_.clear();
    r->aut_power_cache_.clear();
    switch (kind_) {
        case Kind::laurent:
            break;
        case Kind::twisted_laurent:
            std::swap(r->aut_, r->aut_inv_);
            break;
        case Kind::graded_quotient:
            for (auto& d : r->degrees_) d = -d;
            break;
    }
    r->pou_plus_ = swap_pou(pou_minus_, 1);
    r->pou_minus_ = swap_pou(pou_plus_, -1);
    return r;
}

Homog Ring::h_reversed(const Homog& a) const {
    Homog h = a;
    h.degree = -h.degree;
    return h;
}

GradedScalar GradedScalar::one(RingPtr ring) {
    GradedScalar g(ring);
    g.add_component(ring->h_one());
    return g;
}

GradedScalar GradedScalar::from_homog(RingPtr ring, Homog h) {
    GradedScalar g(std::move(ring));
    g.add_component(h);
    return g;
}

Homog GradedScalar::component(int degree) const {
    auto it = comps_.find(degree);
    if (it != comps_.end()) return it->second;
    return ring_->h_zero(degree);
}

void GradedScalar::add_component(const Homog& h) {
    if (ring_->h_is_zero(h)) return;
    auto it = comps_.find(h.degree);
    if (it == comps_.end()) {
        comps_.emplace(h.degree, h);
    } else {
        it->second = ring_->h_add(it->second, h);
        if (ring_->h_is_zero(it->second)) comps_.erase(it);
    }
}

std::optional<std::pair<int, int>> GradedScalar::degree_span() const {
    if (comps_.empty()) return std::nullopt;
    return std::make_pair(comps_.begin()->first, comps_.rbegin()->first);
}

GradedScalar GradedScalar::operator-() const {
    GradedScalar g(ring_);
    for (const auto& [d, h] : comps_) g.comps_.emplace(d, ring_->h_neg(h));
    return g;
}

static void check_rings(const GradedScalar& a, const GradedScalar& b) {
    if (!a.ring() || !b.ring()) throw std::invalid_argument("GradedScalar: missing ring");
    if (a.ring().get() != b.ring().get() && !a.ring()->same(*b.ring()))
        throw std::invalid_argument("GradedScalar: mixed-ring operands");
}

GradedScalar operator+(const GradedScalar& a, const GradedScalar& b) {
    check_rings(a, b);
    GradedScalar g = a;
    for (const auto& [d, h] : b.components()) g.add_component(h);
    return g;
}

GradedScalar operator-(const GradedScalar& a, const GradedScalar& b) { return a + (-b); }

GradedScalar operator*(const GradedScalar& a, const GradedScalar& b) {
    check_rings(a, b);
    GradedScalar g(a.ring());
    for (const auto& [da, ha] : a.components())
        for (const auto& [db, hb] : b.components()) g.add_component(a.ring()->h_mul(ha, hb));
    return g;
}

GradedScalar GradedScalar::scaled(const Scalar& c) const {
    GradedScalar g(ring_);
    if (c.is_zero()) return g;
    for (const auto& [d, h] : comps_) g.add_component(ring_->h_scale(h, c));
    return g;
}

bool GradedScalar::operator==(const GradedScalar& o) const {
    if (comps_.size() != o.comps_.size()) return false;
    for (const auto& [d, h] : comps_) {
        auto it = o.comps_.find(d);
        if (it == o.comps_.end() || !ring_->h_eq(h, it->second)) return false;
    }
    return true;
}

GradedScalar GradedScalar::reversed(const RingPtr& reversed_ring) const {
    GradedScalar g(reversed_ring);
    for (const auto& [d, h] : comps_) g.add_component(ring_->h_reversed(h));
    return g;
}

std::string GradedScalar::to_string() const {
    if (comps_.empty()) return "0";
    std::string s;
    for (const auto& [d, h] : comps_) {
        if (!s.empty()) s += " + ";
        s += ring_->h_to_string(h);
    }
    return s;
}

GradedScalar gs_int(const RingPtr& ring, long long v) {
    return GradedScalar::from_homog(ring, ring->h_scale(ring->h_one(), Scalar::from_int(ring->field(), v)));
}

Partition derive_partition(const Ring& ring, int n) {
    if (n == 0) {
        return Partition{0, {PartitionPair{ring.h_one(), ring.h_one()}}};
    }
    const Partition& base = n > 0 ? ring.pou_plus() : ring.pou_minus();
    int m = n > 0 ? n : -n;
    Partition out;
    out.n = n;
    std::size_t q = base.pairs.size();
    std::vector<std::size_t> idx(m, 0);
    while (true) {
        Homog u = base.pairs[idx[0]].u;
        for (int i = 1; i < m; ++i) u = ring.h_mul(u, base.pairs[idx[i]].u);
        Homog v = base.pairs[idx[m - 1]].v;
        for (int i = m - 2; i >= 0; --i) v = ring.h_mul(v, base.pairs[idx[i]].v);
        out.pairs.push_back(PartitionPair{std::move(u), std::move(v)});
        int pos = m - 1;
        while (pos >= 0 && idx[pos] + 1 == q) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
    }
    return out;
}

VerifyResult verify_partition(const Ring& ring, const Partition& p) {
    for (std::size_t j = 0; j < p.pairs.size(); ++j) {
        if (p.pairs[j].u.degree != p.n)
            return {false, "pair " + std::to_string(j) + ": u has degree " +
                               std::to_string(p.pairs[j].u.degree) + ", expected " + std::to_string(p.n)};
        if (p.pairs[j].v.degree != -p.n)
            return {false, "pair " + std::to_string(j) + ": v has degree " +
                               std::to_string(p.pairs[j].v.degree) + ", expected " + std::to_string(-p.n)};
    }
    Homog sum = ring.h_zero(0);
    for (const auto& pr : p.pairs) sum = ring.h_add(sum, ring.h_mul(pr.u, pr.v));
    if (!ring.h_eq(sum, ring.h_one()))
        return {false, "sum of u_j*v_j is " + ring.h_to_string(sum) + ", not 1"};
    // dual-basis identity on homogeneous samples of degree n: the partition's
    // own u's, and the component basis when it is finite
    std::vector<Homog> samples;
    for (const auto& pr : p.pairs) samples.push_back(pr.u);
    if (ring.component_finite()) {
        std::size_t d = ring.component_dim();
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<Scalar> c(d, Scalar::zero(ring.field()));
            c[i] = Scalar::one(ring.field());
            samples.push_back(ring.h_from_component_coords(p.n, c));
        }
    }
    for (std::size_t s = 0; s < samples.size(); ++s) {
        Homog acc = ring.h_zero(p.n);
        for (const auto& pr : p.pairs) acc = ring.h_add(acc, ring.h_mul(pr.u, ring.h_mul(pr.v, samples[s])));
        if (!ring.h_eq(acc, samples[s]))
            return {false, "dual-basis identity fails on sample " + std::to_string(s)};
    }
    return {true, ""};
}

}  // namespace grnov
