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

#include "ranklab/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ranklab::io {

namespace {

// ------------------------------------------------------------------ writing

void append_ext_matrix(std::string& out, const char* role, const ExtMatrix& m) {
    const size_t deg = m.field().m();
    out += "mat ";
    out += role;
    out += ' ' + std::to_string(m.rows()) + ' ' + std::to_string(m.cols()) + '\n';
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            auto e = m.at(r, c);
            for (size_t t = 0; t < deg; ++t) {
                if (t) out += ',';
                out += std::to_string(e[t]);
            }
        }
        out += '\n';
    }
}

void append_base_matrix(std::string& out, const char* role, const BaseMatrix& m) {
    out += "mat ";
    out += role;
    out += ' ' + std::to_string(m.rows()) + ' ' + std::to_string(m.cols()) + '\n';
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ' ';
            out += std::to_string(m.at(r, c));
        }
        out += '\n';
    }
}

void append_field(std::string& out, const FieldContext& f) {
    out += "field q=" + std::to_string(f.q()) + " m=" + std::to_string(f.m()) + " mod=";
    const auto& mod = f.modulus();
    for (size_t i = 0; i < mod.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(mod[i]);
    }
    out += '\n';
}

void append_params(std::string& out, const gpt::GptParams& p) {
    out += "params n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
           " ell=" + std::to_string(p.ell) + " a=" + std::to_string(p.a) +
           " t=" + std::to_string(p.t()) +
           " variant=" + (p.variant == gpt::Variant::smart ? "smart" : "general") + '\n';
}

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

// ------------------------------------------------------------------ parsing

struct Reader {
    explicit Reader(const std::string& text) : in(text) {}

    std::istringstream in;
    size_t line_no = 0;
    std::string line;
    bool pushed_back = false;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line_no) + ": " + msg);
    }

    bool next_line() {
        if (pushed_back) {
            pushed_back = false;
            return true;
        }
        if (!std::getline(in, line)) return false;
        ++line_no;
        if (!line.empty() && line.back() == '\r') fail("CR line ending; format requires LF");
        return true;
    }

    void push_back() { pushed_back = true; }

    std::string expect_line(const std::string& what) {
        if (!next_line()) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": unexpected end of file; missing block '" + what + "'");
        }
        return line;
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        const size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

uint64_t parse_uint(Reader& r, const std::string& s) {
    if (s.empty()) r.fail("expected integer, got empty token");
    uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') r.fail("bad integer '" + s + "'");
        v = v * 10 + static_cast<uint64_t>(c - '0');
    }
    return v;
}

// token of the form key=value
std::string expect_kv(Reader& r, const std::string& token, const std::string& key) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0) r.fail("expected '" + key + "=...', got '" + token + "'");
    return token.substr(prefix.size());
}

std::string expect_kind(Reader& r, const std::string& kind) {
    std::string header = r.expect_line("GPTv1 " + kind);
    if (header != "GPTv1 " + kind) {
        r.fail("expected header 'GPTv1 " + kind + "', got '" + header + "'");
    }
    return header;
}

FieldCtxPtr parse_field_line(Reader& r) {
    std::string l = r.expect_line("field");
    auto tok = split(l, ' ');
    if (tok.size() != 4 || tok[0] != "field") r.fail("expected 'field q=.. m=.. mod=..'");
    const uint32_t q = static_cast<uint32_t>(parse_uint(r, expect_kv(r, tok[1], "q")));
    const uint32_t m = static_cast<uint32_t>(parse_uint(r, expect_kv(r, tok[2], "m")));
    std::vector<uint8_t> mod;
    for (const auto& c : split(expect_kv(r, tok[3], "mod"), ',')) {
        mod.push_back(static_cast<uint8_t>(parse_uint(r, c)));
    }
    try {
        return make_context(q, m, &mod);
    } catch (const Error& e) {
        r.fail(e.what());
    }
}

gpt::GptParams parse_params_line(Reader& r, const FieldCtxPtr& ctx) {
    std::string l = r.expect_line("params");
    auto tok = split(l, ' ');
    if (tok.size() != 7 || tok[0] != "params") {
        r.fail("expected 'params n=.. k=.. ell=.. a=.. t=.. variant=..'");
    }
    gpt::GptParams p;
    p.q = ctx->q();
    p.m = ctx->m();
    p.modulus = ctx->modulus();
    p.n = parse_uint(r, expect_kv(r, tok[1], "n"));
    p.k = parse_uint(r, expect_kv(r, tok[2], "k"));
    p.ell = parse_uint(r, expect_kv(r, tok[3], "ell"));
    p.a = parse_uint(r, expect_kv(r, tok[4], "a"));
    const size_t t = parse_uint(r, expect_kv(r, tok[5], "t"));
    const std::string variant = expect_kv(r, tok[6], "variant");
    if (variant == "smart") {
        p.variant = gpt::Variant::smart;
    } else if (variant == "general") {
        p.variant = gpt::Variant::general;
    } else {
        r.fail("unknown variant '" + variant + "'");
    }
    try {
        p.validate();
    } catch (const Error& e) {
        r.fail(e.what());
    }
    if (t != p.t()) r.fail("t inconsistent with floor((n-k)/2)");
    return p;
}

ExtMatrix parse_ext_matrix(Reader& r, const FieldCtxPtr& ctx, const std::string& role) {
    std::string l = r.expect_line("mat " + role);
    auto tok = split(l, ' ');
    if (tok.size() != 4 || tok[0] != "mat") r.fail("expected 'mat " + role + " <rows> <cols>'");
    if (tok[1] != role) r.fail("expected matrix role '" + role + "', got '" + tok[1] + "'");
    const size_t rows = parse_uint(r, tok[2]), cols = parse_uint(r, tok[3]);
    ExtMatrix m(ctx, rows, cols);
    for (size_t row = 0; row < rows; ++row) {
        std::string data = r.expect_line("row " + std::to_string(row) + " of mat " + role);
        auto entries = split(data, ' ');
        if (cols == 0) {
            if (!data.empty()) r.fail("expected empty row");
            continue;
        }
        if (entries.size() != cols) {
            r.fail("expected " + std::to_string(cols) + " entries, got " +
                   std::to_string(entries.size()));
        }
        for (size_t c = 0; c < cols; ++c) {
            auto coeffs = split(entries[c], ',');
            if (coeffs.size() != ctx->m()) {
                r.fail("entry must carry m=" + std::to_string(ctx->m()) + " residues");
            }
            ExtElement e(ctx->m());
            for (size_t t = 0; t < coeffs.size(); ++t) {
                const uint64_t v = parse_uint(r, coeffs[t]);
                if (v >= ctx->q()) r.fail("residue " + std::to_string(v) + " out of range");
                e[t] = static_cast<uint8_t>(v);
            }
            m.set(row, c, e);
        }
    }
    return m;
}

BaseMatrix parse_base_matrix(Reader& r, uint32_t q, const std::string& role) {
    std::string l = r.expect_line("mat " + role);
    auto tok = split(l, ' ');
    if (tok.size() != 4 || tok[0] != "mat") r.fail("expected 'mat " + role + " <rows> <cols>'");
    if (tok[1] != role) r.fail("expected matrix role '" + role + "', got '" + tok[1] + "'");
    const size_t rows = parse_uint(r, tok[2]), cols = parse_uint(r, tok[3]);
    BaseMatrix m(q, rows, cols);
    for (size_t row = 0; row < rows; ++row) {
        std::string data = r.expect_line("row " + std::to_string(row) + " of mat " + role);
        auto entries = split(data, ' ');
        if (entries.size() != cols) {
            r.fail("expected " + std::to_string(cols) + " entries, got " +
                   std::to_string(entries.size()));
        }
        for (size_t c = 0; c < cols; ++c) {
            const uint64_t v = parse_uint(r, entries[c]);
            if (v >= q) r.fail("residue " + std::to_string(v) + " out of range");
            m.at(row, c) = static_cast<uint8_t>(v);
        }
    }
    return m;
}

void expect_end(Reader& r) {
    std::string l = r.expect_line("end");
    if (l != "end") r.fail("expected 'end', got '" + l + "'");
    if (r.next_line()) r.fail("trailing content after 'end'");
}

}  // namespace

// --------------------------------------------------------------- public key

std::string serialize_public_key(const gpt::PublicKey& pk) {
    std::string out = "GPTv1 public-key\n";
    append_field(out, pk.g_pub.field());
    append_params(out, pk.params);
    append_ext_matrix(out, "gpub", pk.g_pub);
    out += "end\n";
    return out;
}

gpt::PublicKey parse_public_key(const std::string& text) {
    Reader r(text);
    expect_kind(r, "public-key");
    FieldCtxPtr ctx = parse_field_line(r);
    gpt::GptParams params = parse_params_line(r, ctx);
    ExtMatrix gpub = parse_ext_matrix(r, ctx, "gpub");
    if (gpub.rows() != params.k || gpub.cols() != params.code_len()) {
        r.fail("gpub must be k x (n+ell)");
    }
    expect_end(r);
    return gpt::PublicKey{params, std::move(gpub), params.t()};
}

// --------------------------------------------------------------- secret key

std::string serialize_secret_key(const gpt::SecretKey& sk) {
    std::string out = "GPTv1 secret-key\n";
    append_field(out, sk.s.field());
    append_params(out, sk.params);
    append_ext_matrix(out, "S", sk.s);
    append_base_matrix(out, "P", sk.p);
    append_ext_matrix(out, "g", sk.g);
    if (sk.params.variant == gpt::Variant::general) {
        append_ext_matrix(out, "X", sk.x);
    } else {
        append_ext_matrix(out, "b", sk.b);
        append_ext_matrix(out, "X2", sk.x2);
    }
    out += "end\n";
    return out;
}

gpt::SecretKey parse_secret_key(const std::string& text) {
    Reader r(text);
    expect_kind(r, "secret-key");
    FieldCtxPtr ctx = parse_field_line(r);
    gpt::GptParams params = parse_params_line(r, ctx);
    gpt::SecretKey sk;
    sk.params = params;
    sk.s = parse_ext_matrix(r, ctx, "S");
    sk.p = parse_base_matrix(r, ctx->q(), "P");
    sk.g = parse_ext_matrix(r, ctx, "g");
    if (sk.s.rows() != params.k || sk.s.cols() != params.k) r.fail("S must be k x k");
    if (sk.p.rows() != params.code_len() || sk.p.cols() != params.code_len()) {
        r.fail("P must be (n+ell) x (n+ell)");
    }
    if (sk.g.rows() != 1 || sk.g.cols() != params.n) r.fail("g must be 1 x n");
    if (params.variant == gpt::Variant::general) {
        sk.x = parse_ext_matrix(r, ctx, "X");
        if (sk.x.rows() != params.k || sk.x.cols() != params.ell) r.fail("X must be k x ell");
    } else {
        sk.b = parse_ext_matrix(r, ctx, "b");
        sk.x2 = parse_ext_matrix(r, ctx, "X2");
        if (sk.b.rows() != 1 || sk.b.cols() != params.a) r.fail("b must be 1 x a");
        if (sk.x2.rows() != params.k || sk.x2.cols() != params.ell - params.a) {
            r.fail("X2 must be k x (ell-a)");
        }
        sk.x1 = q_vandermonde(sk.b, params.k);
    }
    expect_end(r);
    return sk;
}

// --------------------------------------------------- ciphertext and message

std::string serialize_ciphertext(const gpt::Ciphertext& ct) {
    std::string out = "GPTv1 ciphertext\n";
    append_field(out, ct.z.field());
    append_ext_matrix(out, "ct", ct.z);
    out += "end\n";
    return out;
}

gpt::Ciphertext parse_ciphertext(const std::string& text) {
    Reader r(text);
    expect_kind(r, "ciphertext");
    FieldCtxPtr ctx = parse_field_line(r);
    ExtMatrix z = parse_ext_matrix(r, ctx, "ct");
    if (z.rows() != 1) r.fail("ct must be a single row");
    expect_end(r);
    return gpt::Ciphertext{std::move(z)};
}

std::string serialize_message(const ExtMatrix& msg) {
    std::string out = "GPTv1 message\n";
    append_field(out, msg.field());
    append_ext_matrix(out, "msg", msg);
    out += "end\n";
    return out;
}

ExtMatrix parse_message(const std::string& text) {
    Reader r(text);
    expect_kind(r, "message");
    FieldCtxPtr ctx = parse_field_line(r);
    ExtMatrix msg = parse_ext_matrix(r, ctx, "msg");
    if (msg.rows() != 1) r.fail("msg must be a single row");
    expect_end(r);
    return msg;
}

// ----------------------------------------------------------------- alt key

std::string serialize_alt_key(const overbeck::AlternativeKey& alt) {
    std::string out = "GPTv1 alt-key\n";
    append_field(out, alt.s_star.field());
    out += "alt n_eff=" + std::to_string(alt.n_eff) +
           " ell_eff=" + std::to_string(alt.x_star.cols()) + " k=" + std::to_string(alt.k) + '\n';
    append_ext_matrix(out, "Sstar", alt.s_star);
    append_ext_matrix(out, "Xstar", alt.x_star);
    append_ext_matrix(out, "gstar", alt.g_star);
    append_base_matrix(out, "Pstar", alt.p_star);
    out += "end\n";
    return out;
}

overbeck::AlternativeKey parse_alt_key(const std::string& text) {
    Reader r(text);
    expect_kind(r, "alt-key");
    FieldCtxPtr ctx = parse_field_line(r);
    std::string l = r.expect_line("alt");
    auto tok = split(l, ' ');
    if (tok.size() != 4 || tok[0] != "alt") r.fail("expected 'alt n_eff=.. ell_eff=.. k=..'");
    overbeck::AlternativeKey alt;
    alt.n_eff = parse_uint(r, expect_kv(r, tok[1], "n_eff"));
    const size_t ell_eff = parse_uint(r, expect_kv(r, tok[2], "ell_eff"));
    alt.k = parse_uint(r, expect_kv(r, tok[3], "k"));
    alt.s_star = parse_ext_matrix(r, ctx, "Sstar");
    alt.x_star = parse_ext_matrix(r, ctx, "Xstar");
    alt.g_star = parse_ext_matrix(r, ctx, "gstar");
    alt.p_star = parse_base_matrix(r, ctx->q(), "Pstar");
    const size_t len = alt.n_eff + ell_eff;
    if (alt.s_star.rows() != alt.k || alt.s_star.cols() != alt.k) r.fail("Sstar must be k x k");
    if (alt.x_star.rows() != alt.k || alt.x_star.cols() != ell_eff) {
        r.fail("Xstar must be k x ell_eff");
    }
    if (alt.g_star.rows() != 1 || alt.g_star.cols() != alt.n_eff) r.fail("gstar must be 1 x n_eff");
    if (alt.p_star.rows() != len || alt.p_star.cols() != len) r.fail("Pstar must be N x N");
    expect_end(r);
    return alt;
}

// ------------------------------------------------------------ attack report

std::string serialize_report(const AttackReport& report) {
    std::string out = "GPTv1 attack-report\n";
    append_field(out, *report.params.make_field());
    append_params(out, report.params);
    out += "seed " + std::to_string(report.seed) + '\n';
    out += "s " + std::to_string(report.s) + '\n';
    out += "w " + std::to_string(report.w) + '\n';
    out += "redundancy ";
    if (report.redundancy.empty()) {
        out += "none";
    } else {
        for (size_t i = 0; i < report.redundancy.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(report.redundancy[i]);
        }
    }
    out += '\n';
    for (const auto& p : report.s_probes) {
        out += "sprobe " + std::to_string(p.s) + ' ' + std::to_string(p.rank_low) + ' ' +
               std::to_string(p.rank_high) + '\n';
    }
    for (const auto& p : report.redundancy_probes) {
        out += "rprobe " + std::to_string(p.position) + ' ' + std::to_string(p.dim) + ' ' +
               (p.accepted ? '1' : '0') + '\n';
    }
    out += "verify_ratio ";
    out += report.verify_ratio < 0 ? "none" : format_fixed(report.verify_ratio, 6);
    out += '\n';
    if (report.has_timings) {
        out += "timings compute_s=" + format_fixed(report.ms_compute_s, 3) +
               " redundancy=" + format_fixed(report.ms_redundancy, 3) +
               " recover=" + format_fixed(report.ms_recover, 3) +
               " total=" + format_fixed(report.ms_total, 3) + '\n';
    }
    out += "end\n";
    return out;
}

AttackReport parse_report(const std::string& text) {
    Reader r(text);
    expect_kind(r, "attack-report");
    FieldCtxPtr ctx = parse_field_line(r);
    AttackReport rep;
    rep.params = parse_params_line(r, ctx);

    auto tok_of = [&](const std::string& key, size_t count) {
        std::string l = r.expect_line(key);
        auto tok = split(l, ' ');
        if (tok.size() != count || tok[0] != key) {
            r.fail("expected '" + key + "' line with " + std::to_string(count - 1) + " fields");
        }
        return tok;
    };
    rep.seed = parse_uint(r, tok_of("seed", 2)[1]);
    rep.s = parse_uint(r, tok_of("s", 2)[1]);
    rep.w = parse_uint(r, tok_of("w", 2)[1]);
    {
        auto tok = tok_of("redundancy", 2);
        if (tok[1] != "none") {
            for (const auto& c : split(tok[1], ',')) {
                rep.redundancy.push_back(parse_uint(r, c));
            }
        }
    }
    while (r.next_line()) {
        auto tok = split(r.line, ' ');
        if (tok[0] == "sprobe") {
            if (tok.size() != 4) r.fail("sprobe needs 3 fields");
            rep.s_probes.push_back(
                {parse_uint(r, tok[1]), parse_uint(r, tok[2]), parse_uint(r, tok[3])});
        } else if (tok[0] == "rprobe") {
            if (tok.size() != 4) r.fail("rprobe needs 3 fields");
            rep.redundancy_probes.push_back(
                {parse_uint(r, tok[1]), parse_uint(r, tok[2]), tok[3] == "1"});
        } else {
            r.push_back();
            break;
        }
    }
    {
        auto tok = tok_of("verify_ratio", 2);
        if (tok[1] != "none") {
            try {
                rep.verify_ratio = std::stod(tok[1]);
            } catch (const std::exception&) {
                r.fail("bad ratio '" + tok[1] + "'");
            }
        }
    }
    if (r.next_line()) {
        auto tok = split(r.line, ' ');
        if (tok[0] == "timings") {
            if (tok.size() != 5) r.fail("timings needs 4 fields");
            rep.has_timings = true;
            try {
                rep.ms_compute_s = std::stod(expect_kv(r, tok[1], "compute_s"));
                rep.ms_redundancy = std::stod(expect_kv(r, tok[2], "redundancy"));
                rep.ms_recover = std::stod(expect_kv(r, tok[3], "recover"));
                rep.ms_total = std::stod(expect_kv(r, tok[4], "total"));
            } catch (const std::exception&) {
                r.fail("bad timings value");
            }
        } else {
            r.push_back();
        }
    }
    expect_end(r);
    return rep;
}

// ------------------------------------------------------------------- files

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

}  // namespace ranklab::io
