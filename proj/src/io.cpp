#include "grnov/io.hpp"

#include <fstream>
#include <sstream>

namespace grnov {

namespace {
const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw IoError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int need_int(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer()) throw IoError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::string need_string(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_string()) throw IoError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}
}  // namespace

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("malformed JSON");
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << text;
}

Scalar scalar_from_json(const Field& f, const Json& j) {
    if (!j.is_string()) throw IoError("coefficients must be exact strings");
    try {
        return Scalar::from_string(f, j.get<std::string>());
    } catch (const std::exception& e) {
        throw IoError(std::string("bad coefficient: ") + e.what());
    }
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Homog homog_from_json(const RingPtr& ring, const Json& j) {
    int degree = need_int(j, "degree");
    switch (ring->kind()) {
        case Ring::Kind::laurent:
            return ring->h_from_coeff(degree, scalar_from_json(ring->field(), need(j, "coeff")));
        case Ring::Kind::twisted_laurent: {
            const Json& c = need(j, "coords");
            if (!c.is_array() || c.size() != ring->dim())
                throw IoError("coords must be an array of length dim");
            std::vector<Scalar> v;
            for (const auto& x : c) v.push_back(scalar_from_json(ring->field(), x));
            return ring->h_from_coords(degree, std::move(v));
        }
        case Ring::Kind::graded_quotient: {
            const Json& terms = need(j, "terms");
            if (!terms.is_array()) throw IoError("terms must be an array");
            std::vector<Term> ts;
            for (const auto& t : terms) {
                const Json& e = need(t, "exps");
                if (!e.is_array() || e.size() != ring->var_names().size())
                    throw IoError("exps must list one exponent per variable");
                Monomial m;
                for (const auto& x : e) {
                    if (!x.is_number_integer() || x.get<long>() < 0)
                        throw IoError("exponents must be non-negative integers");
                    m.push_back(x.get<std::uint32_t>());
                }
                ts.push_back(Term{std::move(m), scalar_from_json(ring->field(), need(t, "coeff"))});
            }
            try {
                return ring->h_from_poly(degree, MultiPoly::from_terms(std::move(ts)));
            } catch (const std::exception& e) {
                throw IoError(std::string("bad homogeneous element: ") + e.what());
            }
        }
    }
    throw IoError("unknown ring kind");
}

Json homog_to_json(const RingPtr& ring, const Homog& h) {
    Json j;
    j["degree"] = h.degree;
    switch (ring->kind()) {
        case Ring::Kind::laurent:
            j["coeff"] = std::get<Scalar>(h.payload).to_string();
            break;
        case Ring::Kind::twisted_laurent: {
            Json c = Json::array();
            for (const auto& x : std::get<std::vector<Scalar>>(h.payload)) c.push_back(x.to_string());
            j["coords"] = std::move(c);
            break;
        }
        case Ring::Kind::graded_quotient: {
            Json terms = Json::array();
            for (const auto& t : std::get<MultiPoly>(h.payload).terms()) {
                Json tj;
                tj["coeff"] = t.coeff.to_string();
                Json e = Json::array();
                for (auto x : t.mono) e.push_back(x);
                tj["exps"] = std::move(e);
                terms.push_back(std::move(tj));
            }
            j["terms"] = std::move(terms);
            break;
        }
    }
    return j;
}

GradedScalar graded_from_json(const RingPtr& ring, const Json& j) {
    if (!j.is_array()) throw IoError("ring element must be an array of homogeneous components");
    GradedScalar g(ring);
    for (const auto& c : j) g.add_component(homog_from_json(ring, c));
    return g;
}

Json graded_to_json(const GradedScalar& g) {
    Json j = Json::array();
    for (const auto& [d, h] : g.components()) j.push_back(homog_to_json(g.ring(), h));
    return j;
}

TruncNov truncnov_from_json(const RingPtr& ring, const Json& j) {
    long lo = kNovPosInf, hi = kNovPosInf;
    if (j.contains("lo") && !j.at("lo").is_null()) lo = j.at("lo").get<long>();
    if (j.contains("hi") && !j.at("hi").is_null()) hi = j.at("hi").get<long>();
    std::map<int, Homog> comps;
    for (const auto& c : need(j, "components")) {
        Homog h = homog_from_json(ring, c);
        comps.emplace(h.degree, h);
    }
    return TruncNov::from_components(ring, lo, hi, std::move(comps));
}

Json truncnov_to_json(const TruncNov& t) {
    Json j;
    j["lo"] = t.lo() >= kNovPosInf || t.lo() <= kNovNegInf ? Json(nullptr) : Json(t.lo());
    j["hi"] = t.hi() >= kNovPosInf ? Json(nullptr) : Json(t.hi());
    Json comps = Json::array();
    for (const auto& [d, h] : t.components()) comps.push_back(homog_to_json(t.ring(), h));
    j["components"] = std::move(comps);
    return j;
}

namespace {
Field field_from_json(const Json& j) {
    std::string kind = need_string(j, "kind");
    if (kind == "Q") return Field::Q();
    if (kind == "Fp") {
        if (!j.contains("p") || !j.at("p").is_number_unsigned())
            throw IoError("prime field needs a positive 'p'");
        try {
            return Field::Fp(j.at("p").get<std::uint64_t>());
        } catch (const std::exception& e) {
            throw IoError(e.what());
        }
    }
    throw IoError("field kind must be 'Q' or 'Fp'");
}

Json field_to_json(const Field& f) {
    Json j;
    if (f.kind == Field::Kind::rationals) {
        j["kind"] = "Q";
    } else {
        j["kind"] = "Fp";
        j["p"] = f.p;
    }
    return j;
}

// a partition document is a list of [u, v] homog pairs
Partition partition_from_json(const RingPtr& ring, int n, const Json& j) {
    if (!j.is_array()) throw IoError("partition must be an array of pairs");
    Partition p;
    p.n = n;
    for (const auto& pr : j) {
        if (!pr.is_array() || pr.size() != 2) throw IoError("partition pairs must be [u, v]");
        p.pairs.push_back(PartitionPair{homog_from_json(ring, pr.at(0)), homog_from_json(ring, pr.at(1))});
    }
    return p;
}

Json partition_to_json(const RingPtr& ring, const Partition& p) {
    Json j = Json::array();
    for (const auto& pr : p.pairs) {
        Json pair = Json::array();
        pair.push_back(homog_to_json(ring, pr.u));
        pair.push_back(homog_to_json(ring, pr.v));
        j.push_back(std::move(pair));
    }
    return j;
}

MultiPoly poly_from_json(const Field& f, std::size_t nvars, const Json& j) {
    if (!j.is_array()) throw IoError("polynomial must be an array of terms");
    std::vector<Term> ts;
    for (const auto& t : j) {
        const Json& e = need(t, "exps");
        if (!e.is_array() || e.size() != nvars) throw IoError("exps must list one exponent per variable");
        Monomial m;
        for (const auto& x : e) {
            if (!x.is_number_integer() || x.get<long>() < 0)
                throw IoError("exponents must be non-negative integers");
            m.push_back(x.get<std::uint32_t>());
        }
        ts.push_back(Term{std::move(m), scalar_from_json(f, need(t, "coeff"))});
    }
    return MultiPoly::from_terms(std::move(ts));
}

Json poly_to_json(const MultiPoly& p) {
    Json j = Json::array();
    for (const auto& t : p.terms()) {
        Json tj;
        tj["coeff"] = t.coeff.to_string();
        Json e = Json::array();
        for (auto x : t.mono) e.push_back(x);
        tj["exps"] = std::move(e);
        j.push_back(std::move(tj));
    }
    return j;
}
}  // namespace

RingPtr ring_from_json(const Json& j, bool validate) {
    if (need_string(j, "schema") != "grnov.ring/1") throw IoError("expected schema grnov.ring/1");
    Field f = field_from_json(need(j, "field"));
    std::string kind = need_string(j, "kind");
    RingPtr ring;
    try {
        if (kind == "laurent") {
            ring = Ring::make_laurent(f);
        } else if (kind == "twisted_laurent") {
            const Json& tw = need(j, "twisted_laurent");
            std::size_t dim = static_cast<std::size_t>(need_int(tw, "dim"));
            std::vector<Scalar> one;
            for (const auto& x : need(tw, "one")) one.push_back(scalar_from_json(f, x));
            std::vector<std::vector<std::vector<Scalar>>> strc;
            for (const auto& row : need(tw, "structure")) {
                std::vector<std::vector<Scalar>> r;
                for (const auto& cell : row) {
                    std::vector<Scalar> v;
                    for (const auto& x : cell) v.push_back(scalar_from_json(f, x));
                    r.push_back(std::move(v));
                }
                strc.push_back(std::move(r));
            }
            std::vector<std::vector<Scalar>> aut;
            for (const auto& row : need(tw, "automorphism")) {
                std::vector<Scalar> r;
                for (const auto& x : row) r.push_back(scalar_from_json(f, x));
                aut.push_back(std::move(r));
            }
            ring = Ring::make_twisted(f, dim, std::move(one), std::move(strc), std::move(aut));
        } else if (kind == "graded_quotient") {
            const Json& gq = need(j, "graded_quotient");
            std::vector<std::string> names;
            std::vector<int> degrees;
            for (const auto& v : need(gq, "variables")) {
                names.push_back(need_string(v, "name"));
                degrees.push_back(need_int(v, "degree"));
            }
            if (need_string(gq, "order") != "lex")
                throw IoError("only the lex monomial order is supported");
            std::vector<MultiPoly> relations;
            for (const auto& r : need(gq, "relations"))
                relations.push_back(poly_from_json(f, names.size(), r));
            const Json& parts = need(j, "partitions");
            // partition entries are ring elements; parse them against an
            // unvalidated ring of the same shape
            RingPtr shape = Ring::make_graded_quotient_unvalidated(f, names, degrees, relations);
            Partition plus = partition_from_json(shape, 1, need(parts, "plus"));
            Partition minus = partition_from_json(shape, -1, need(parts, "minus"));
            ring = Ring::make_graded_quotient(f, std::move(names), std::move(degrees),
                                              std::move(relations), std::move(plus), std::move(minus),
                                              validate);
        } else {
            throw IoError("unknown ring kind: " + kind);
        }
    } catch (const IoError&) {
        throw;
    } catch (const std::exception& e) {
        throw IoError(e.what());
    }
    // explicit partitions override the defaults for component-finite rings
    if (ring->kind() != Ring::Kind::graded_quotient && j.contains("partitions")) {
        throw IoError("explicit partitions are only accepted for graded_quotient rings");
    }
    return ring;
}

Json ring_to_json(const Ring& r) {
    Json j;
    j["schema"] = "grnov.ring/1";
    j["field"] = field_to_json(r.field());
    switch (r.kind()) {
        case Ring::Kind::laurent:
            j["kind"] = "laurent";
            break;
        case Ring::Kind::twisted_laurent: {
            j["kind"] = "twisted_laurent";
            Json tw;
            tw["dim"] = r.dim();
            Json one = Json::array();
            for (const auto& x : r.one_coords()) one.push_back(x.to_string());
            tw["one"] = std::move(one);
            Json strc = Json::array();
            for (std::size_t i = 0; i < r.dim(); ++i) {
                Json row = Json::array();
                for (std::size_t k = 0; k < r.dim(); ++k) {
                    std::vector<Scalar> ei(r.dim(), Scalar::zero(r.field()));
                    ei[i] = Scalar::one(r.field());
                    std::vector<Scalar> ek(r.dim(), Scalar::zero(r.field()));
                    ek[k] = Scalar::one(r.field());
                    Homog a = r.h_from_coords(0, ei);
                    Homog b = r.h_from_coords(0, ek);
                    Homog prod = r.h_mul(a, b);
                    Json cell = Json::array();
                    for (const auto& x : std::get<std::vector<Scalar>>(prod.payload))
                        cell.push_back(x.to_string());
                    row.push_back(std::move(cell));
                }
                strc.push_back(std::move(row));
            }
            tw["structure"] = std::move(strc);
            Json aut = Json::array();
            for (const auto& row : r.aut()) {
                Json rr = Json::array();
                for (const auto& x : row) rr.push_back(x.to_string());
                aut.push_back(std::move(rr));
            }
            tw["automorphism"] = std::move(aut);
            j["twisted_laurent"] = std::move(tw);
            break;
        }
        case Ring::Kind::graded_quotient: {
            j["kind"] = "graded_quotient";
            Json gq;
            Json vars = Json::array();
            for (std::size_t i = 0; i < r.var_names().size(); ++i) {
                Json v;
                v["name"] = r.var_names()[i];
                v["degree"] = r.var_degrees()[i];
                vars.push_back(std::move(v));
            }
            gq["variables"] = std::move(vars);
            gq["order"] = "lex";
            Json rels = Json::array();
            for (const auto& rel : r.relations()) rels.push_back(poly_to_json(rel));
            gq["relations"] = std::move(rels);
            j["graded_quotient"] = std::move(gq);
            RingPtr self = r.shared_from_this();
            Json parts;
            parts["plus"] = partition_to_json(self, r.pou_plus());
            parts["minus"] = partition_to_json(self, r.pou_minus());
            j["partitions"] = std::move(parts);
            break;
        }
    }
    return j;
}

FreeComplex complex_from_json(const Json& j) {
    if (need_string(j, "schema") != "grnov.complex/1") throw IoError("expected schema grnov.complex/1");
    RingPtr ring = ring_from_json(need(j, "ring"));
    int lo = need_int(j, "lo");
    std::vector<int> ranks;
    for (const auto& r : need(j, "ranks")) {
        if (!r.is_number_integer() || r.get<int>() < 0) throw IoError("ranks must be non-negative");
        ranks.push_back(r.get<int>());
    }
    std::vector<GsMatrix> diffs;
    const Json& dd = need(j, "diffs");
    for (std::size_t i = 0; i + 1 < ranks.size(); ++i) {
        int n = lo + static_cast<int>(i) + 1;
        std::string key = std::to_string(n);
        if (!dd.contains(key)) throw IoError("missing differential at index " + key);
        const Json& mj = dd.at(key);
        int rows = ranks[i], cols = ranks[i + 1];
        if (static_cast<int>(mj.size()) != rows) throw IoError("differential " + key + ": wrong row count");
        GsMatrix m = gs_zero_matrix(ring, rows, cols);
        for (int a = 0; a < rows; ++a) {
            const Json& row = mj.at(static_cast<std::size_t>(a));
            if (static_cast<int>(row.size()) != cols)
                throw IoError("differential " + key + ": wrong column count");
            for (int b = 0; b < cols; ++b) m.at(a, b) = graded_from_json(ring, row.at(static_cast<std::size_t>(b)));
        }
        diffs.push_back(std::move(m));
    }
    FreeComplex c;
    try {
        c = FreeComplex(ring, lo, std::move(ranks), std::move(diffs));
    } catch (const std::exception& e) {
        throw IoError(e.what());
    }
    auto check = validate_complex(c);
    if (!check.ok) throw IoError("complex does not satisfy d.d = 0: " + check.message);
    return c;
}

Json complex_to_json(const FreeComplex& c) {
    Json j;
    j["schema"] = "grnov.complex/1";
    j["ring"] = ring_to_json(*c.ring());
    j["lo"] = c.lo();
    Json ranks = Json::array();
    for (int r : c.ranks()) ranks.push_back(r);
    j["ranks"] = std::move(ranks);
    Json dd;
    for (int n = c.lo() + 1; n <= c.hi(); ++n) {
        GsMatrix m = c.diff_at(n);
        Json mj = Json::array();
        for (int a = 0; a < m.rows(); ++a) {
            Json row = Json::array();
            for (int b = 0; b < m.cols(); ++b) row.push_back(graded_to_json(m.at(a, b)));
            mj.push_back(std::move(row));
        }
        dd[std::to_string(n)] = std::move(mj);
    }
    j["diffs"] = std::move(dd);
    return j;
}

Certificate certificate_from_json(const RingPtr& base_ring, const Json& j) {
    if (need_string(j, "schema") != "grnov.cert/1") throw IoError("expected schema grnov.cert/1");
    Certificate cert;
    std::string dir = need_string(j, "direction");
    if (dir == "plus")
        cert.direction = Certificate::Direction::plus;
    else if (dir == "minus")
        cert.direction = Certificate::Direction::minus;
    else
        throw IoError("direction must be 'plus' or 'minus'");
    // minus certificates are stated over the grading-reversed ring
    RingPtr ring = cert.direction == Certificate::Direction::minus ? base_ring->reversed() : base_ring;
    cert.truncation = need_int(j, "truncation");
    cert.lo = need_int(j, "lo");
    const Json& maps = need(j, "maps");
    int count = need_int(j, "count");
    for (int i = 0; i < count; ++i) {
        std::string key = std::to_string(cert.lo + i);
        if (!maps.contains(key)) throw IoError("missing certificate map at index " + key);
        const Json& mj = maps.at(key);
        int rows = static_cast<int>(mj.size());
        int cols = rows ? static_cast<int>(mj.at(0).size()) : 0;
        NovMatrix m = nov_zero_matrix(ring, rows, cols);
        for (int a = 0; a < rows; ++a) {
            const Json& row = mj.at(static_cast<std::size_t>(a));
            if (static_cast<int>(row.size()) != cols) throw IoError("ragged certificate matrix");
            for (int b = 0; b < cols; ++b)
                m.at(a, b) = truncnov_from_json(ring, row.at(static_cast<std::size_t>(b)));
        }
        cert.maps.push_back(std::move(m));
    }
    return cert;
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["schema"] = "grnov.cert/1";
    j["direction"] = cert.direction == Certificate::Direction::plus ? "plus" : "minus";
    j["truncation"] = cert.truncation;
    j["lo"] = cert.lo;
    j["count"] = static_cast<int>(cert.maps.size());
    Json maps;
    for (std::size_t i = 0; i < cert.maps.size(); ++i) {
        const NovMatrix& m = cert.maps[i];
        Json mj = Json::array();
        for (int a = 0; a < m.rows(); ++a) {
            Json row = Json::array();
            for (int b = 0; b < m.cols(); ++b) row.push_back(truncnov_to_json(m.at(a, b)));
            mj.push_back(std::move(row));
        }
        maps[std::to_string(cert.lo + static_cast<int>(i))] = std::move(mj);
    }
    j["maps"] = std::move(maps);
    return j;
}

Json witness_to_json(const SheafComplex& s, const R0Complex& w, const std::map<int, long>* betti) {
    Json j;
    j["schema"] = "grnov.witness/1";
    j["lo"] = w.lo();
    Json windows;
    for (int n = s.base.lo(); n <= s.base.hi(); ++n) {
        auto [q, p] = s.window_at(n);
        Json wj;
        wj["q"] = q;
        wj["p"] = p;
        windows[std::to_string(n)] = std::move(wj);
    }
    j["windows"] = std::move(windows);
    Json levels;
    for (int n = w.lo(); n <= w.hi(); ++n) {
        Json lvl = Json::array();
        for (const auto& sm : w.level(n)) {
            Json sj;
            sj["gen"] = sm.gen;
            sj["degree"] = sm.degree;
            lvl.push_back(std::move(sj));
        }
        levels[std::to_string(n)] = std::move(lvl);
    }
    j["levels"] = std::move(levels);
    Json dd;
    for (int n = w.lo() + 1; n <= w.hi(); ++n) {
        GsMatrix m = w.diff_at(n);
        Json mj = Json::array();
        for (int a = 0; a < m.rows(); ++a) {
            Json row = Json::array();
            for (int b = 0; b < m.cols(); ++b) row.push_back(graded_to_json(m.at(a, b)));
            mj.push_back(std::move(row));
        }
        dd[std::to_string(n)] = std::move(mj);
    }
    j["diffs"] = std::move(dd);
    if (betti) {
        Json bj;
        for (const auto& [n, b] : *betti) bj[std::to_string(n)] = b;
        j["betti"] = std::move(bj);
    }
    return j;
}

WitnessDocument witness_from_json(const RingPtr& ring, const Json& j) {
    if (need_string(j, "schema") != "grnov.witness/1") throw IoError("expected schema grnov.witness/1");
    WitnessDocument doc;
    for (const auto& [key, wj] : need(j, "windows").items())
        doc.windows[std::stoi(key)] = {need_int(wj, "q"), need_int(wj, "p")};
    int lo = need_int(j, "lo");
    std::vector<std::vector<R0Summand>> levels;
    const Json& lv = need(j, "levels");
    for (int n = lo;; ++n) {
        std::string key = std::to_string(n);
        if (!lv.contains(key)) break;
        std::vector<R0Summand> lvl;
        for (const auto& sj : lv.at(key)) lvl.push_back(R0Summand{need_int(sj, "gen"), need_int(sj, "degree")});
        levels.push_back(std::move(lvl));
    }
    std::vector<GsMatrix> diffs;
    const Json& dd = need(j, "diffs");
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        int n = lo + static_cast<int>(i) + 1;
        const Json& mj = dd.at(std::to_string(n));
        int rows = static_cast<int>(levels[i].size());
        int cols = static_cast<int>(levels[i + 1].size());
        GsMatrix m = gs_zero_matrix(ring, rows, cols);
        for (int a = 0; a < rows; ++a)
            for (int b = 0; b < cols; ++b)
                m.at(a, b) = graded_from_json(ring, mj.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b)));
        diffs.push_back(std::move(m));
    }
    doc.complex = R0Complex(ring, lo, std::move(levels), std::move(diffs));
    if (j.contains("betti")) {
        doc.has_betti = true;
        for (const auto& [key, b] : j.at("betti").items()) doc.betti[std::stoi(key)] = b.get<long>();
    }
    return doc;
}

}  // namespace grnov
