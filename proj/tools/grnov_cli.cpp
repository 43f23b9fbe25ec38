// Command-line front end; talks to the library exclusively through the C API.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "grnov.h"

namespace {

int report(int rc) {
    if (rc != GRNOV_OK) std::cerr << "error: " << grnov_last_error() << "\n";
    return rc;
}

bool write_output(const std::string& path, const char* text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    out << text;
    return true;
}

std::string read_file(const std::string& path, bool& ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ok = false;
        return {};
    }
    ok = true;
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct RingHandle {
    grnov_ring* r = nullptr;
    ~RingHandle() { grnov_ring_free(r); }
};

struct ComplexHandle {
    grnov_complex* c = nullptr;
    ~ComplexHandle() { grnov_complex_free(c); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { grnov_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grnov: strongly graded rings, Novikov homology certificates, and "
                 "finite-domination witnesses"};
    app.require_subcommand(1);

    std::string ring_path, complex_path, cert_path, out_path;
    std::string direction = "plus";
    std::string suite = "all";
    long truncation = 8;
    int window_lo = 0;
    std::uint64_t seed = 1;
    int samples = 200;

    auto* ring_cmd = app.add_subcommand("ring", "ring document operations");
    auto* ring_verify = ring_cmd->add_subcommand("verify", "load a ring document and re-run its checks");
    ring_verify->add_option("path", ring_path, "ring document")->required();

    auto* cx_cmd = app.add_subcommand("complex", "complex document operations");
    auto* cx_validate = cx_cmd->add_subcommand("validate", "load a complex document and check d.d = 0");
    cx_validate->add_option("path", complex_path, "complex document")->required();

    auto* nov = app.add_subcommand("novikov", "Novikov homology certificates");
    auto* nov_search = nov->add_subcommand("search", "solve for a contraction order by order");
    nov_search->add_option("path", complex_path, "complex document")->required();
    nov_search->add_option("--direction", direction, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
    nov_search->add_option("--truncation", truncation, "certificate truncation degree");
    nov_search->add_option("--window-lo", window_lo, "lowest certificate degree (0 = default)");
    nov_search->add_option("--out", out_path, "write the certificate document here");
    auto* nov_verify = nov->add_subcommand("verify", "check a certificate");
    nov_verify->add_option("path", complex_path, "complex document")->required();
    nov_verify->add_option("--cert", cert_path, "certificate document")->required();
    nov_verify->add_option("--truncation", truncation, "verify at this truncation (-1 = certificate's own)");
    auto* nov_decide = nov->add_subcommand("decide", "exact decision over the untwisted Laurent ring");
    nov_decide->add_option("path", complex_path, "complex document")->required();
    nov_decide->add_option("--direction", direction, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));

    auto* dominate = app.add_subcommand("dominate", "extract the finite-domination witness complex");
    dominate->add_option("path", complex_path, "complex document")->required();
    dominate->add_option("--out", out_path, "write the witness document here");

    auto* identities = app.add_subcommand("identities", "run the seeded identity suites");
    identities->add_option("path", ring_path, "ring document")->required();
    identities->add_option("--suite", suite, "all|resolution|windows|series|adjoints");
    identities->add_option("--seed", seed, "random seed");
    identities->add_option("--samples", samples, "samples per identity");

    auto* paper = app.add_subcommand("paper-example", "end-to-end run of the bundled example");
    paper->add_option("--truncation", truncation, "certificate truncation degree");

    CLI11_PARSE(app, argc, argv);

    if (*ring_verify) {
        RingHandle h;
        int rc = grnov_ring_load_file(ring_path.c_str(), &h.r);
        if (rc != GRNOV_OK) return report(rc);
        rc = grnov_ring_verify(h.r);
        if (rc == GRNOV_OK) std::cout << "ring verified\n";
        return report(rc);
    }
    if (*cx_validate) {
        ComplexHandle h;
        int rc = grnov_complex_load_file(complex_path.c_str(), &h.c);
        if (rc != GRNOV_OK) return report(rc);
        rc = grnov_complex_validate(h.c);
        if (rc == GRNOV_OK) std::cout << "complex validated\n";
        return report(rc);
    }
    if (*nov_search) {
        ComplexHandle h;
        int rc = grnov_complex_load_file(complex_path.c_str(), &h.c);
        if (rc != GRNOV_OK) return report(rc);
        StringHandle cert;
        int dir = direction == "minus" ? GRNOV_DIR_MINUS : GRNOV_DIR_PLUS;
        rc = grnov_novikov_search(h.c, dir, truncation, window_lo, &cert.s);
        if (rc == GRNOV_OK) {
            if (!write_output(out_path, cert.s)) return GRNOV_INPUT_ERROR;
        } else if (rc == GRNOV_INCONCLUSIVE) {
            std::cerr << "inconclusive: " << grnov_last_error() << "\n";
            return rc;
        }
        return report(rc);
    }
    if (*nov_verify) {
        ComplexHandle h;
        int rc = grnov_complex_load_file(complex_path.c_str(), &h.c);
        if (rc != GRNOV_OK) return report(rc);
        bool ok = false;
        std::string cert_text = read_file(cert_path, ok);
        if (!ok) {
            std::cerr << "error: cannot read " << cert_path << "\n";
            return GRNOV_INPUT_ERROR;
        }
        long t = nov_verify->count("--truncation") ? truncation : -1;
        rc = grnov_novikov_verify(h.c, cert_text.c_str(), t);
        if (rc == GRNOV_OK) std::cout << "certificate verified\n";
        return report(rc);
    }
    if (*nov_decide) {
        ComplexHandle h;
        int rc = grnov_complex_load_file(complex_path.c_str(), &h.c);
        if (rc != GRNOV_OK) return report(rc);
        int dir = direction == "minus" ? GRNOV_DIR_MINUS : GRNOV_DIR_PLUS;
        rc = grnov_novikov_decide(h.c, dir);
        std::cout << (rc == GRNOV_OK ? "acyclic\n" : "not acyclic\n");
        return rc == GRNOV_OK || rc == GRNOV_FAIL ? rc : report(rc);
    }
    if (*dominate) {
        ComplexHandle h;
        int rc = grnov_complex_load_file(complex_path.c_str(), &h.c);
        if (rc != GRNOV_OK) return report(rc);
        StringHandle witness;
        rc = grnov_dominate(h.c, &witness.s);
        if (rc == GRNOV_OK) {
            if (!write_output(out_path, witness.s)) return GRNOV_INPUT_ERROR;
        }
        return report(rc);
    }
    if (*identities) {
        RingHandle h;
        int rc = grnov_ring_load_file(ring_path.c_str(), &h.r);
        if (rc != GRNOV_OK) return report(rc);
        StringHandle rep;
        rc = grnov_identities(h.r, suite.c_str(), seed, samples, &rep.s);
        if (rep.s) std::cout << rep.s << "\n";
        return rc == GRNOV_FAIL ? rc : report(rc);
    }
    if (*paper) {
        StringHandle rep;
        int rc = grnov_paper_example(truncation, &rep.s);
        if (rep.s) std::cout << rep.s << "\n";
        return rc == GRNOV_FAIL ? rc : report(rc);
    }
    return GRNOV_INPUT_ERROR;
}
