/* Copyright 2026 The fermat-lines Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// fermatlat: Neron-Severi lattices of Fermat surfaces from their lines.
//
// Subcommands:
//   invariants    numerical invariants of the degree-m surface
//   gram          write the Gram matrix of the line basis
//   verify-lemma  determinants of the modified relation-matrix blocks
//   disc          exact determinant + factorization of a matrix file
//   find-cover    supersingular cover parameters for a degree
//   find-line     a validated special pair (alpha, beta) on the cover
//   certify       run a certification pipeline; exit 0 = GENERATED,
//                 2 = INCONCLUSIVE, 1 = error
//   self-test     lattice-criteria toolkit on synthetic examples

#include <cstring>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermat/certify.hpp"
#include "fermat/characters.hpp"

using namespace fermat;

namespace {

void print_invariants(const SurfaceInvariants& s, bool as_json) {
    if (as_json) {
        nlohmann::ordered_json j;
        j["m"] = s.m;
        j["b2"] = s.b2;
        j["pg"] = s.pg;
        j["chi"] = s.chi;
        j["e"] = s.e;
        j["ksq"] = s.ksq;
        j["h11"] = s.h11;
        j["rho"] = s.rho;
        j["lambda"] = s.lambda;
        j["count_a"] = s.count_a;
        j["count_b"] = s.count_b;
        j["count_d"] = s.count_d;
        std::cout << j.dump(2) << "\n";
        return;
    }
    auto row = [](const char* name, int64_t v) { std::cout << "  " << name << std::string(12 - strlen(name), ' ') << v << "\n"; };
    std::cout << "degree " << s.m << " Fermat surface\n";
    row("b2", s.b2);
    row("pg", s.pg);
    row("chi", s.chi);
    row("e", s.e);
    row("K^2", s.ksq);
    row("h11", s.h11);
    row("rho", s.rho);
    row("lambda", s.lambda);
    row("#A_m", s.count_a);
    row("#B_m", s.count_b);
    row("#D_m", s.count_d);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neron-Severi lattices of Fermat surfaces from their lines"};
    app.require_subcommand(1);

    // invariants
    int64_t inv_m = 0;
    bool inv_json = false;
    auto* inv = app.add_subcommand("invariants", "surface invariants for degree m");
    inv->add_option("m", inv_m, "degree")->required();
    inv->add_flag("--json", inv_json, "emit JSON");

    // gram
    int64_t gram_m = 0;
    std::string gram_basis = "rational", gram_out;
    auto* gram = app.add_subcommand("gram", "write a Gram matrix of lines");
    gram->add_option("--degree", gram_m, "degree")->required();
    gram->add_option("--basis", gram_basis, "full | rational")->check(CLI::IsMember({"full", "rational"}));
    gram->add_option("--out", gram_out, "output file")->required();

    // verify-lemma
    int64_t lemma_m = 0;
    auto* lemma = app.add_subcommand("verify-lemma", "relation-matrix block determinants");
    lemma->add_option("--degree", lemma_m, "degree")->required();

    // disc
    std::string disc_file;
    auto* disc = app.add_subcommand("disc", "exact determinant of a matrix file");
    disc->add_option("--matrix", disc_file, "plain-text matrix file")->required();

    // find-cover
    int64_t cover_m = 0;
    auto* cover_cmd = app.add_subcommand("find-cover", "supersingular cover parameters");
    cover_cmd->add_option("m", cover_m, "degree")->required();

    // find-line
    int64_t line_m = 0;
    uint64_t line_seed = 1;
    auto* line_cmd = app.add_subcommand("find-line", "search a special pair on the cover");
    line_cmd->add_option("--degree", line_m, "degree")->required();
    line_cmd->add_option("--seed", line_seed, "search seed");

    // certify
    int64_t cert_m = 0;
    std::string cert_mode = "duality", cert_table, cert_ells, cert_json_out;
    uint64_t cert_seed = 1;
    auto* cert_cmd = app.add_subcommand("certify", "certify integral generation by lines");
    cert_cmd->add_option("--degree", cert_m, "degree")->required();
    cert_cmd->add_option("--mode", cert_mode, "duality | disc")->check(CLI::IsMember({"duality", "disc"}));
    cert_cmd->add_option("--table", cert_table, "cover table (TSV)");
    cert_cmd->add_option("--seed", cert_seed, "run seed");
    cert_cmd->add_option("--ell", cert_ells, "comma-separated primes ell | m");
    cert_cmd->add_option("--json", cert_json_out, "write the certificate JSON here");

    auto* selftest = app.add_subcommand("self-test", "lattice-criteria toolkit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*inv) {
            print_invariants(surface_invariants(inv_m), inv_json);
        } else if (*gram) {
            auto lines = gram_basis == "full" ? all_lines(gram_m) : rational_basis(gram_m);
            IntMatrix g = gram_matrix(lines, gram_m);
            std::ofstream out(gram_out);
            if (!out) fail(ErrorCode::bad_input, "cannot open " + gram_out);
            write_matrix(out, g);
            std::cout << "wrote " << g.rows() << "x" << g.cols() << " Gram matrix to " << gram_out << "\n";
        } else if (*lemma) {
            BlockDeterminants first = relation_block_determinants(lemma_m, 1);
            for (int64_t r = 2; r <= lemma_m; ++r) {
                BlockDeterminants d = relation_block_determinants(lemma_m, r);
                if (d.det_bu != first.det_bu || d.det_du != first.det_du || d.det_mix != first.det_mix)
                    fail(ErrorCode::oracle_mismatch, "determinants depend on r");
            }
            std::cout << "det(B-I+U(r))    = " << first.det_bu << "  (all r)\n";
            std::cout << "det(D-I+U(r))    = " << first.det_du << "  (all r)\n";
            std::cout << "det(2I-B-D+U(2)) = " << first.det_mix << "\n";
        } else if (*disc) {
            std::ifstream in(disc_file);
            if (!in) fail(ErrorCode::bad_input, "cannot open " + disc_file);
            IntMatrix m = read_matrix(in);
            Bint d = det_exact(m);
            std::cout << "det = " << d << "\n";
            if (d != 0) std::cout << "    = " << (d < 0 ? "-" : "") << factorization_to_string(factorize(d)) << "\n";
        } else if (*cover_cmd) {
            CoverParams c = find_cover_params(cover_m);
            std::cout << "m=" << c.m << " r=" << c.r << " q=" << c.q << " p=" << c.p << " n=" << c.n
                      << " (cover degree " << c.r * c.m << ")\n";
        } else if (*line_cmd) {
            CoverParams c = find_cover_params(line_m);
            auto ctx = build_field_ctx(c.p, find_defining_poly(c.p, line_m, line_seed), line_m);
            auto [alpha, beta] = find_special_pair(*ctx, c, line_seed);
            auto coeffs = [&](const FieldElem& e) {
                std::string s;
                for (int i = 0; i < ctx->deg(); ++i) s += (i ? "," : "") + std::to_string(e.c[i]);
                return s;
            };
            std::cout << "f = ";
            for (size_t i = 0; i < ctx->defining_poly().size(); ++i)
                std::cout << (i ? "," : "") << ctx->defining_poly()[i];
            std::cout << "\nalpha = " << coeffs(alpha) << "  (" << ctx->to_string(alpha) << ")\n";
            std::cout << "beta  = " << coeffs(beta) << "  (" << ctx->to_string(beta) << ")\n";
        } else if (*cert_cmd) {
            Certificate cert;
            if (cert_mode == "disc") {
                cert = certify_discriminant(cert_m);
            } else {
                CertificationConfig config;
                config.m = cert_m;
                config.seed = cert_seed;
                std::string table_path = cert_table.empty() ? default_table_path() : cert_table;
                config.pinned = table_rows_for_degree(load_table(table_path), cert_m);
                if (config.pinned.empty())
                    fail(ErrorCode::row_not_found, "degree not in table; use --mode disc or extend the table");
                if (!cert_ells.empty()) {
                    std::stringstream ss(cert_ells);
                    std::string tok;
                    while (std::getline(ss, tok, ',')) config.ells.push_back(std::stoll(tok));
                }
                cert = certify_duality(config);
            }
            std::string json = certificate_to_json(cert);
            if (!cert_json_out.empty()) {
                std::ofstream out(cert_json_out);
                out << json << "\n";
            }
            std::cout << json << "\n";
            return cert.verdict == Verdict::generated ? 0 : 2;
        } else if (*selftest) {
            ToolkitReport report = primitivity_toolkit();
            for (const auto& l : report.lines) std::cout << l << "\n";
            std::cout << (report.failures == 0 ? "all checks passed" : "FAILURES: " + std::to_string(report.failures))
                      << "\n";
            return report.failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
