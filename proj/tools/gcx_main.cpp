// Command-line front end. Talks to the core exclusively through the C
// interface in gcx.h. Exit codes: 0 = success / verification passed,
// 1 = a verification failed, 2 = usage error.

#include "CLI11.hpp"
#include "gcx.h"

#include <cstdio>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Print the thread-local error and map the code to an exit status. Argument
// problems (GCX_EINVAL) are usage errors; internal failures are reported as
// verification failures.
int report_error(int rc) {
    std::fprintf(stderr, "error: %s\n", gcx_last_error());
    return rc == GCX_EINVAL ? kExitUsage : kExitFail;
}

std::string take(char* s) {
    std::string out = s ? s : "";
    gcx_free_string(s);
    return out;
}

bool json_pass(const std::string& j) { return j.find("\"pass\": true") != std::string::npos; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph complex computations"};
    app.require_subcommand(1);

    // ---- enumerate ----
    std::string flavor = "dGC";
    int k = 3, v = 0, e = 0, b = 0;
    auto* enumerate = app.add_subcommand("enumerate", "canonical generator classes");
    enumerate->add_option("--flavor", flavor, "complex name")->required();
    enumerate->add_option("-k,--k", k, "degree parameter k")->required();
    enumerate->add_option("--v", v, "number of vertices")->required();
    enumerate->add_option("--e", e, "number of edges")->required();

    // ---- cohomology ----
    int d_min = 0, d_max = 0, i_max = -1;
    std::string sms_dir;
    auto* coh = app.add_subcommand("cohomology", "cohomology dimensions at fixed loop order");
    coh->add_option("--flavor", flavor, "complex name")->required();
    coh->add_option("-k,--k", k, "degree parameter k")->required();
    coh->add_option("-b,--b", b, "loop order");
    auto* odmin = coh->add_option("--d-min", d_min, "lowest degree");
    auto* odmax = coh->add_option("--d-max", d_max, "highest degree");
    auto* oimax =
        coh->add_option("--i-max", i_max, "degrees 0..i-max at loop order 1 (loop complex)");
    coh->add_option("--sms-dir", sms_dir, "dump assembled matrices here (SMS format)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "consistency checks");
    verify->require_subcommand(1);
    int v_max = 4, e_max = 6;
    auto* d2 = verify->add_subcommand("d2", "d^2 == 0 on a generator window");
    d2->add_option("--flavor", flavor, "complex name")->required();
    d2->add_option("-k,--k", k, "degree parameter k")->required();
    d2->add_option("--v", v_max, "largest vertex count")->required();
    d2->add_option("--e", e_max, "largest edge count")->required();
    std::string map_name;
    auto* cm = verify->add_subcommand("chainmap", "chain-map identity on a generator window");
    cm->add_option("name", map_name, "map name (f, b, fs, ft, a, aplusb, cone, b_corrupt)")
        ->required();
    cm->add_option("-k,--k", k, "degree parameter k")->required();
    cm->add_option("--v", v_max, "largest vertex count");
    cm->add_option("--e", e_max, "largest edge count");

    // ---- grt ----
    bool emit_derivations = false;
    int m = 1, n = 1;
    std::string field = "q";
    auto* grt = app.add_subcommand("grt", "tetrahedron-class reproduction");
    grt->add_flag("--emit-derivations", emit_derivations, "also print the induced derivations");
    grt->add_option("--m", m, "corolla out-hairs for the derivation rendering");
    grt->add_option("--n", n, "corolla in-hairs for the derivation rendering");
    grt->add_option("--field", field, "rank field to report: q or gf32003");
    grt->add_option("--sms-dir", sms_dir, "dump the assembled matrix here (SMS format)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    if (*enumerate) {
        char* text = nullptr;
        long count = 0;
        int rc = gcx_enumerate(flavor.c_str(), k, v, e, &text, &count);
        if (rc != GCX_OK) return report_error(rc);
        std::string t = take(text);
        std::printf("{ \"flavor\": \"%s\", \"k\": %d, \"v\": %d, \"e\": %d, \"count\": %ld }\n",
                    flavor.c_str(), k, v, e, count);
        std::fputs(t.c_str(), stdout);
        return kExitPass;
    }

    if (*coh) {
        if (*oimax) {
            if (*odmin || *odmax || b != 0) {
                std::fprintf(stderr, "error: --i-max replaces -b/--d-min/--d-max\n");
                return kExitUsage;
            }
            b = 1;
            d_min = 0;
            d_max = i_max;
        } else if (!*odmin && !*odmax) {
            // default window around degree zero at the requested loop order
            d_min = -5;
            d_max = 5;
        }
        char* json = nullptr;
        int rc = gcx_cohomology(flavor.c_str(), k, b, d_min, d_max,
                                sms_dir.empty() ? nullptr : sms_dir.c_str(), &json);
        if (rc != GCX_OK) return report_error(rc);
        std::printf("%s\n", take(json).c_str());
        return kExitPass;
    }

    if (*d2) {
        int pass = 0;
        int rc = gcx_verify_d2(flavor.c_str(), k, v_max, e_max, &pass);
        if (rc != GCX_OK) return report_error(rc);
        std::printf("{ \"check\": \"d2\", \"flavor\": \"%s\", \"k\": %d, \"v_max\": %d, "
                    "\"e_max\": %d, \"pass\": %s }\n",
                    flavor.c_str(), k, v_max, e_max, pass ? "true" : "false");
        return pass ? kExitPass : kExitFail;
    }

    if (*cm) {
        char* json = nullptr;
        int rc = gcx_verify_chainmap(map_name.c_str(), k, v_max, e_max, &json);
        if (rc != GCX_OK) return report_error(rc);
        std::string j = take(json);
        std::printf("%s\n", j.c_str());
        return json_pass(j) ? kExitPass : kExitFail;
    }

    if (*grt) {
        if (field != "q" && field != "gf32003") {
            std::fprintf(stderr, "error: --field must be q or gf32003\n");
            return kExitUsage;
        }
        char* json = nullptr;
        int rc = gcx_grt_report(sms_dir.empty() ? nullptr : sms_dir.c_str(), &json);
        if (rc != GCX_OK) return report_error(rc);
        std::string j = take(json);
        std::printf("{ \"field\": \"%s\", \"report\": %s", field.c_str(), j.c_str());
        if (emit_derivations) {
            char* ds = nullptr;
            char* dt = nullptr;
            if (gcx_grt_derivation("s", m, n, &ds) != GCX_OK ||
                gcx_grt_derivation("t", m, n, &dt) != GCX_OK) {
                gcx_free_string(ds);
                std::printf(" }\n");
                return report_error(GCX_EINVAL);
            }
            std::printf(", \"derivations\": [%s, %s]", take(ds).c_str(), take(dt).c_str());
        }
        std::printf(" }\n");
        return json_pass(j) ? kExitPass : kExitFail;
    }

    return kExitUsage;
}
