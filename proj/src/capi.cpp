#include "grnov.h"

#include <cstring>
#include <string>

#include "grnov/bundled.hpp"
#include "grnov/identities.hpp"
#include "grnov/io.hpp"
#include "grnov/laurent_homology.hpp"

using namespace grnov;

struct grnov_ring {
    RingPtr ring;
};

struct grnov_complex {
    FreeComplex cx;
};

namespace {
thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// input problems map to GRNOV_INPUT_ERROR, anything else to GRNOV_FAIL
template <class F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const IoError& e) {
        set_error(e.what());
        return GRNOV_INPUT_ERROR;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return GRNOV_INPUT_ERROR;
    } catch (const std::exception& e) {
        set_error(e.what());
        return GRNOV_FAIL;
    }
}

Certificate::Direction to_direction(int d) {
    return d == GRNOV_DIR_MINUS ? Certificate::Direction::minus : Certificate::Direction::plus;
}
}  // namespace

extern "C" {

const char* grnov_version(void) { return "grnov 1.0.0"; }

const char* grnov_last_error(void) { return g_last_error.c_str(); }

void grnov_string_free(char* s) { delete[] s; }

int grnov_ring_load(const char* json_text, grnov_ring** out) {
    if (!json_text || !out) {
        set_error("null argument");
        return GRNOV_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded([&] {
        // parse only; grnov_ring_verify reports failed ring checks as GRNOV_FAIL
        RingPtr r = ring_from_json(parse_json_text(json_text), false);
        *out = new grnov_ring{std::move(r)};
        return GRNOV_OK;
    });
}

int grnov_ring_load_file(const char* path, grnov_ring** out) {
    if (!path || !out) {
        set_error("null argument");
        return GRNOV_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded([&] {
        RingPtr r = ring_from_json(parse_json_text(read_text_file(path)), false);
        *out = new grnov_ring{std::move(r)};
        return GRNOV_OK;
    });
}

void grnov_ring_free(grnov_ring* ring) { delete ring; }

int grnov_ring_verify(const grnov_ring* ring) {
    if (!ring) {
        set_error("null ring");
        return GRNOV_INPUT_ERROR;
    }
    return guarded([&] {
        auto plus = verify_partition(*ring->ring, ring->ring->pou_plus());
        if (!plus.ok) {
            set_error("pou_plus: " + plus.message);
            return GRNOV_FAIL;
        }
        auto minus = verify_partition(*ring->ring, ring->ring->pou_minus());
        if (!minus.ok) {
            set_error("pou_minus: " + minus.message);
            return GRNOV_FAIL;
        }
        return GRNOV_OK;
    });
}

int grnov_complex_load(const char* json_text, grnov_complex** out) {
    if (!json_text || !out) {
        set_error("null argument");
        return GRNOV_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded([&] {
        FreeComplex c = complex_from_json(parse_json_text(json_text));
        *out = new grnov_complex{std::move(c)};
        return GRNOV_OK;
    });
}

int grnov_complex_load_file(const char* path, grnov_complex** out) {
    if (!path || !out) {
        set_error("null argument");
        return GRNOV_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded([&] {
        FreeComplex c = complex_from_json(parse_json_text(read_text_file(path)));
        *out = new grnov_complex{std::move(c)};
        return GRNOV_OK;
    });
}

void grnov_complex_free(grnov_complex* cx) { delete cx; }

int grnov_complex_validate(const grnov_complex* cx) {
    if (!cx) {
        set_error("null complex");
        return GRNOV_INPUT_ERROR;
    }
    return guarded([&] {
        auto r = validate_complex(cx->cx);
        if (!r.ok) {
            set_error(r.message);
            return GRNOV_FAIL;
        }
        return GRNOV_OK;
    });
}

int grnov_novikov_verify(const grnov_complex* cx, const char* cert_json, long truncation) {
    if (!cx || !cert_json) {
        set_error("null argument");
        return GRNOV_INPUT_ERROR;
    }
    return guarded([&] {
        Certificate cert = certificate_from_json(cx->cx.ring(), parse_json_text(cert_json));
        if (truncation >= 0) cert.truncation = truncation;
        auto r = contraction_verify(cx->cx, cert);
        if (!r.ok) {
            set_error(r.message);
            return GRNOV_FAIL;
        }
        return GRNOV_OK;
    });
}

int grnov_novikov_search(const grnov_complex* cx, int direction, long truncation, int window_lo,
                         char** cert_json_out) {
    if (!cx) {
        set_error("null complex");
        return GRNOV_INPUT_ERROR;
    }
    if (cert_json_out) *cert_json_out = nullptr;
    return guarded([&] {
        int wlo = window_lo != 0 ? window_lo : contraction_default_window_lo(cx->cx, truncation);
        auto found = contraction_search(cx->cx, to_direction(direction), truncation, wlo);
        if (!found) {
            set_error("not found at window [" + std::to_string(wlo) + ", ..]; inconclusive");
            return GRNOV_INCONCLUSIVE;
        }
        if (cert_json_out) *cert_json_out = dup_string(certificate_to_json(*found).dump(2));
        return GRNOV_OK;
    });
}

int grnov_novikov_decide(const grnov_complex* cx, int direction) {
    if (!cx) {
        set_error("null complex");
        return GRNOV_INPUT_ERROR;
    }
    return guarded([&] {
        NovikovDecision d = laurent_novikov_decide(cx->cx);
        NovikovVerdict v = direction == GRNOV_DIR_MINUS ? d.minus : d.plus;
        if (v == NovikovVerdict::acyclic) return GRNOV_OK;
        set_error("Novikov homology does not vanish");
        return GRNOV_FAIL;
    });
}

int grnov_dominate(const grnov_complex* cx, char** witness_json_out) {
    if (!cx) {
        set_error("null complex");
        return GRNOV_INPUT_ERROR;
    }
    if (witness_json_out) *witness_json_out = nullptr;
    return guarded([&] {
        SheafComplex s = extend_to_sheaf(cx->cx);
        R0Complex w = h0_witness(s);
        Json doc;
        if (cx->cx.ring()->component_finite()) {
            auto betti = r0_betti(w);
            doc = witness_to_json(s, w, &betti);
        } else {
            doc = witness_to_json(s, w, nullptr);
        }
        if (witness_json_out) *witness_json_out = dup_string(doc.dump(2));
        return GRNOV_OK;
    });
}

int grnov_identities(const grnov_ring* ring, const char* suite, uint64_t seed, int samples,
                     char** report_json_out) {
    if (!ring || !suite) {
        set_error("null argument");
        return GRNOV_INPUT_ERROR;
    }
    if (report_json_out) *report_json_out = nullptr;
    return guarded([&] {
        auto reports = run_identity_suites(ring->ring, suite, seed, samples);
        Json doc;
        doc["schema"] = "grnov.report/1";
        doc["command"] = "identities";
        doc["seed"] = seed;
        doc["samples"] = samples;
        if (samples == 0) doc["warning"] = "samples == 0: all suites pass vacuously";
        bool all_pass = true;
        Json suites;
        for (const auto& r : reports) {
            suites[r.suite] = r.pass ? "pass" : ("fail: " + r.failure);
            all_pass = all_pass && r.pass;
        }
        doc["suites"] = std::move(suites);
        doc["verdict"] = all_pass ? "pass" : "fail";
        if (report_json_out) *report_json_out = dup_string(doc.dump(2));
        if (!all_pass) {
            set_error("identity suite failed; see report");
            return GRNOV_FAIL;
        }
        return GRNOV_OK;
    });
}

int grnov_paper_example(long truncation, char** report_json_out) {
    if (report_json_out) *report_json_out = nullptr;
    return guarded([&] {
        Json doc;
        doc["schema"] = "grnov.report/1";
        doc["command"] = "paper-example";
        doc["truncation"] = truncation;
        if (truncation < 8) doc["note"] = "truncation below 8 is a weaker check than the default";
        FreeComplex c = bundled_paper_complex(Field::Q());
        auto valid = validate_complex(c);
        doc["complex_valid"] = valid.ok;
        if (!valid.ok) {
            set_error(valid.message);
            if (report_json_out) *report_json_out = dup_string(doc.dump(2));
            return GRNOV_FAIL;
        }
        Certificate plus = bundled_paper_certificate(c.ring(), Certificate::Direction::plus, truncation);
        Certificate minus = bundled_paper_certificate(c.ring(), Certificate::Direction::minus, truncation);
        auto vp = contraction_verify(c, plus);
        auto vm = contraction_verify(c, minus);
        doc["certificate_plus"] = vp.ok ? "verified" : ("failed: " + vp.message);
        doc["certificate_minus"] = vm.ok ? "verified" : ("failed: " + vm.message);
        SheafComplex s = extend_to_sheaf(c);
        R0Complex w = h0_witness(s);
        auto wcheck = r0_validate(w);
        doc["witness"] = witness_to_json(s, w, nullptr);
        doc["witness_valid"] = wcheck.ok;
        bool ok = vp.ok && vm.ok && wcheck.ok;
        doc["verdict"] = ok ? "pass" : "fail";
        if (report_json_out) *report_json_out = dup_string(doc.dump(2));
        if (!ok) {
            set_error("paper example failed; see report");
            return GRNOV_FAIL;
        }
        return GRNOV_OK;
    });
}

}  // extern "C"
