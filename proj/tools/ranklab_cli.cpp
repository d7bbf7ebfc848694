/*
 * Copyright 2026 The ranklab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ranklab/serialize.hpp"

namespace {

using namespace ranklab;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string format_ms(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string format_ratio(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::vector<uint8_t> parse_modulus_flag(const std::string& csv) {
    std::vector<uint8_t> mod;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t pos = csv.find(',', start);
        if (pos == std::string::npos) pos = csv.size();
        mod.push_back(static_cast<uint8_t>(std::stoul(csv.substr(start, pos - start))));
        start = pos + 1;
    }
    return mod;
}

struct KeygenArgs {
    gpt::GptParams params;
    std::string variant = "general";
    std::string modulus_csv;
    uint64_t seed = 0;
    int engineer_s = -1;
    std::string out_pk = "pk.gpt";
    std::string out_sk = "sk.gpt";
};

int cmd_keygen(const KeygenArgs& args) {
    gpt::GptParams params = args.params;
    params.variant = args.variant == "smart" ? gpt::Variant::smart : gpt::Variant::general;
    if (!args.modulus_csv.empty()) params.modulus = parse_modulus_flag(args.modulus_csv);
    Rng rng(args.seed);
    gpt::KeyPair kp = [&] {
        if (params.variant == gpt::Variant::general) return gpt::keygen_general(params, rng);
        if (args.engineer_s >= 0) {
            return gpt::keygen_smart_engineered(params, static_cast<size_t>(args.engineer_s), rng);
        }
        return gpt::keygen_smart(params, rng);
    }();
    io::write_file(args.out_pk, io::serialize_public_key(kp.pk));
    io::write_file(args.out_sk, io::serialize_secret_key(kp.sk));
    std::cout << "wrote " << args.out_pk << " and " << args.out_sk << " (q=" << params.q
              << " m=" << params.m << " n=" << params.n << " k=" << params.k
              << " ell=" << params.ell << " a=" << params.a << " t=" << params.t()
              << " variant=" << args.variant << ")\n";
    return 0;
}

int cmd_encrypt(const std::string& pk_path, const std::string& msg_path, bool random_msg,
                const std::string& msg_out, const std::string& out, uint64_t seed) {
    gpt::PublicKey pk = io::parse_public_key(io::read_file(pk_path));
    Rng rng(seed);
    ExtMatrix msg = random_msg ? gpt::random_message(pk.g_pub.field_ptr(), pk.params.k, rng)
                               : io::parse_message(io::read_file(msg_path));
    if (random_msg && !msg_out.empty()) {
        io::write_file(msg_out, io::serialize_message(msg));
    }
    gpt::Ciphertext ct = gpt::encrypt(msg, pk, rng);
    io::write_file(out, io::serialize_ciphertext(ct));
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_decrypt(const std::string& sk_path, const std::string& ct_path, const std::string& out) {
    gpt::SecretKey sk = io::parse_secret_key(io::read_file(sk_path));
    gpt::Ciphertext ct = io::parse_ciphertext(io::read_file(ct_path));
    ExtMatrix msg = gpt::decrypt(ct, sk);
    io::write_file(out, io::serialize_message(msg));
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_distinguish(const std::string& pk_path, int imax_flag) {
    gpt::PublicKey pk = io::parse_public_key(io::read_file(pk_path));
    const size_t n = pk.params.n, k = pk.params.k;
    const size_t i_star = n - k - 1;
    const size_t i_max = imax_flag >= 0 ? static_cast<size_t>(imax_flag) : i_star;
    const std::vector<size_t> dims = overbeck::lambda_profile(pk.g_pub, i_max);
    std::cout << "i dim gabidulin_bound generic_bound\n";
    for (size_t i = 0; i <= i_max; ++i) {
        const size_t len = pk.params.code_len();
        std::cout << i << ' ' << dims[i] << ' ' << std::min(len, k + i) << ' '
                  << std::min(len, (i + 1) * k) << "\n";
    }
    const size_t dim_star = i_star <= i_max
                                ? dims[i_star]
                                : row_space_dim(lambda(pk.g_pub, i_star));
    const size_t dual_dim = pk.params.code_len() - dim_star;
    std::cout << "dual dimension at i=" << i_star << ": " << dual_dim << "\n";
    std::cout << (dual_dim == 1 ? "verdict: gabidulin-like public code (dual dimension 1)\n"
                                : "verdict: distortion-masked public code (dual dimension != 1)\n");
    return 0;
}

io::AttackReport report_from_result(const gpt::PublicKey& pk, const smart::AttackResult& result,
                                    uint64_t seed, double ratio, bool timings) {
    io::AttackReport rep;
    rep.params = pk.params;
    rep.seed = seed;
    rep.s = result.s;
    rep.w = result.redundancy.size();
    rep.redundancy = result.redundancy;
    rep.s_probes = result.stats.s_probes;
    rep.redundancy_probes = result.stats.redundancy_probes;
    rep.verify_ratio = ratio;
    if (timings) {
        rep.has_timings = true;
        rep.ms_compute_s = result.stats.ms_compute_s;
        rep.ms_redundancy = result.stats.ms_redundancy;
        rep.ms_recover = result.stats.ms_recover;
        rep.ms_total = result.stats.ms_total;
    }
    return rep;
}

int cmd_attack(const std::string& pk_path, uint64_t seed, size_t trials,
               const std::string& out_report, const std::string& out_alt, bool timings) {
    gpt::PublicKey pk = io::parse_public_key(io::read_file(pk_path));
    Rng rng(seed);
    smart::AttackResult result = smart::attack(pk, rng);
    double ratio = -1;
    if (trials > 0) ratio = smart::verify(pk, result, trials, rng);

    std::cout << "s " << result.s << "\nw " << result.redundancy.size() << "\nredundancy";
    for (size_t p : result.redundancy) std::cout << ' ' << p;
    std::cout << "\ntimings_ms compute_s=" << format_ms(result.stats.ms_compute_s)
              << " redundancy=" << format_ms(result.stats.ms_redundancy)
              << " recover=" << format_ms(result.stats.ms_recover)
              << " total=" << format_ms(result.stats.ms_total) << "\n";
    if (ratio >= 0) std::cout << "verify_ratio " << format_ratio(ratio) << "\n";

    io::write_file(out_report, io::serialize_report(report_from_result(pk, result, seed, ratio,
                                                                       timings)));
    io::write_file(out_alt, io::serialize_alt_key(result.alt));
    std::cout << "wrote " << out_report << " and " << out_alt << "\n";
    return 0;
}

int cmd_verify(const std::string& pk_path, const std::string& report_path,
               const std::string& alt_path, size_t trials, uint64_t seed) {
    gpt::PublicKey pk = io::parse_public_key(io::read_file(pk_path));
    io::AttackReport rep = io::parse_report(io::read_file(report_path));
    smart::AttackResult result;
    result.s = rep.s;
    result.redundancy = rep.redundancy;
    result.reduced_pub =
        rep.redundancy.empty() ? pk.g_pub : puncture(pk.g_pub, rep.redundancy);
    result.alt = io::parse_alt_key(io::read_file(alt_path));
    Rng rng(seed);
    const double ratio = smart::verify(pk, result, trials, rng);
    std::cout << "verify_ratio " << format_ratio(ratio) << "\n";
    return 0;
}

struct BenchPoint {
    gpt::GptParams params;
};

int cmd_bench(const std::vector<std::string>& points, size_t trials, uint64_t seed,
              const std::string& out) {
    std::vector<std::string> rows;
    size_t index = 0;
    for (const auto& spec : points) {
        gpt::GptParams p;
        unsigned q, m;
        size_t n, k, ell, a;
        if (std::sscanf(spec.c_str(), "%u,%u,%zu,%zu,%zu,%zu", &q, &m, &n, &k, &ell, &a) != 6) {
            throw ParseError("bench point must be q,m,n,k,ell,a (got '" + spec + "')");
        }
        p.q = q;
        p.m = m;
        p.n = n;
        p.k = k;
        p.ell = ell;
        p.a = a;
        p.variant = gpt::Variant::smart;
        p.validate();
        const std::string prefix = std::to_string(q) + ',' + std::to_string(m) + ',' +
                                   std::to_string(n) + ',' + std::to_string(k) + ',' +
                                   std::to_string(ell) + ',' + std::to_string(a) + ',' +
                                   std::to_string(p.t());
        for (size_t trial = 0; trial < trials; ++trial) {
            const uint64_t point_seed = seed + 1000003 * index + trial;
            Rng rng(point_seed);
            auto emit = [&](const char* phase, double ms, bool ok) {
                rows.push_back(prefix + ',' + std::to_string(point_seed) + ',' +
                               std::to_string(trial) + ',' + phase + ',' + format_ms(ms) + ',' +
                               (ok ? '1' : '0'));
            };
            auto t0 = std::chrono::steady_clock::now();
            gpt::KeyPair kp = gpt::keygen_smart(p, rng);
            emit("keygen", ms_since(t0), true);
            bool ok = true;
            double ratio = 0;
            smart::AttackResult result;
            auto t1 = std::chrono::steady_clock::now();
            try {
                result = smart::attack(kp.pk, rng);
                emit("compute_s", result.stats.ms_compute_s, true);
                emit("redundancy", result.stats.ms_redundancy, true);
                emit("recover", result.stats.ms_recover, true);
                auto t2 = std::chrono::steady_clock::now();
                ratio = smart::verify(kp.pk, result, 10, rng);
                emit("verify", ms_since(t2), ratio == 1.0);
            } catch (const Error&) {
                ok = false;
            }
            emit("total", ms_since(t1), ok && ratio == 1.0);
        }
        ++index;
    }
    std::sort(rows.begin(), rows.end());
    std::string csv = "q,m,n,k,ell,a,t,seed,trial,phase,ms,success\n";
    for (const auto& row : rows) csv += row + '\n';
    if (out.empty()) {
        std::cout << csv;
    } else {
        io::write_file(out, csv);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-metric cryptography workbench: Gabidulin codes, GPT encryption, "
                 "Frobenius-stack distinguishing and structural key recovery"};
    app.require_subcommand(1);

    KeygenArgs kg;
    auto* keygen = app.add_subcommand("keygen", "generate a GPT key pair");
    keygen->add_option("--q", kg.params.q, "base field size (prime)")->required();
    keygen->add_option("--m", kg.params.m, "extension degree")->required();
    keygen->add_option("--n", kg.params.n, "Gabidulin code length")->required();
    keygen->add_option("--k", kg.params.k, "code dimension")->required();
    keygen->add_option("--ell", kg.params.ell, "distortion width")->required();
    keygen->add_option("--a", kg.params.a, "q-Vandermonde width (smart variant)");
    keygen->add_option("--variant", kg.variant, "general | smart")
        ->check(CLI::IsMember({"general", "smart"}));
    keygen->add_option("--modulus", kg.modulus_csv, "modulus coefficients c0,...,cm");
    keygen->add_option("--seed", kg.seed, "RNG seed")->required();
    keygen->add_option("--engineer-s", kg.engineer_s,
                       "force rank_weight(b|g) = n + s (smart variant)");
    keygen->add_option("--out-pk", kg.out_pk, "public key file");
    keygen->add_option("--out-sk", kg.out_sk, "secret key file");

    std::string pk_path, sk_path, msg_path, ct_path, out_path, report_path, alt_path, msg_out;
    bool random_msg = false, timings = false;
    uint64_t seed = 0;
    size_t trials = 0;
    int imax = -1;

    auto* encrypt = app.add_subcommand("encrypt", "encrypt a message file");
    encrypt->add_option("--pk", pk_path, "public key file")->required();
    encrypt->add_option("--msg", msg_path, "message file");
    encrypt->add_flag("--random-msg", random_msg, "sample a random message instead");
    encrypt->add_option("--msg-out", msg_out, "where to store the sampled message");
    encrypt->add_option("--out", out_path, "ciphertext file")->required();
    encrypt->add_option("--seed", seed, "RNG seed")->required();

    auto* decrypt = app.add_subcommand("decrypt", "decrypt a ciphertext file");
    decrypt->add_option("--sk", sk_path, "secret key file")->required();
    decrypt->add_option("--ct", ct_path, "ciphertext file")->required();
    decrypt->add_option("--out", out_path, "output message file")->required();

    auto* distinguish = app.add_subcommand("distinguish", "print the Lambda-dimension profile");
    distinguish->add_option("--pk", pk_path, "public key file")->required();
    distinguish->add_option("--imax", imax, "largest i to profile (default n-k-1)");

    auto* attack = app.add_subcommand("attack", "recover an alternative key (smart variant)");
    attack->add_option("--pk", pk_path, "public key file")->required();
    attack->add_option("--seed", seed, "RNG seed")->required();
    attack->add_option("--trials", trials, "verification trials to run inline");
    attack->add_option("--out-report", report_path, "attack report file")->required();
    attack->add_option("--out-alt", alt_path, "alternative key file")->required();
    attack->add_flag("--timings", timings, "record wall times in the report file");

    auto* verify = app.add_subcommand("verify", "measure decryption success of an attack output");
    verify->add_option("--pk", pk_path, "public key file")->required();
    verify->add_option("--report", report_path, "attack report file")->required();
    verify->add_option("--alt", alt_path, "alternative key file")->required();
    verify->add_option("--trials", trials, "number of ciphertexts")->required();
    verify->add_option("--seed", seed, "RNG seed")->required();

    std::vector<std::string> bench_points;
    auto* bench = app.add_subcommand("bench", "time attack phases over a parameter grid");
    bench->add_option("--point", bench_points, "parameter point q,m,n,k,ell,a (repeatable)")
        ->required();
    bench->add_option("--trials", trials, "keys per point")->required();
    bench->add_option("--seed", seed, "RNG seed")->required();
    bench->add_option("--out", out_path, "CSV output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*keygen) return cmd_keygen(kg);
        if (*encrypt) {
            if (!random_msg && msg_path.empty()) {
                std::cerr << "encrypt: provide --msg or --random-msg\n";
                return 2;
            }
            return cmd_encrypt(pk_path, msg_path, random_msg, msg_out, out_path, seed);
        }
        if (*decrypt) return cmd_decrypt(sk_path, ct_path, out_path);
        if (*distinguish) return cmd_distinguish(pk_path, imax);
        if (*attack) return cmd_attack(pk_path, seed, trials, report_path, alt_path, timings);
        if (*verify) return cmd_verify(pk_path, report_path, alt_path, trials, seed);
        if (*bench) return cmd_bench(bench_points, trials, seed, out_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
