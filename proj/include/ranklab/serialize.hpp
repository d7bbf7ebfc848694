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

#ifndef RANKLAB_SERIALIZE_HPP
#define RANKLAB_SERIALIZE_HPP

#include <string>

#include "ranklab/smartattack.hpp"

namespace ranklab::io {

/*
 * Text formats, line oriented, LF endings, no trailing whitespace:
 *
 *   GPTv1 <kind>
 *   field q=<q> m=<m> mod=<c0,...,cm>
 *   params n=<n> k=<k> ell=<ell> a=<a> t=<t> variant=<general|smart>
 *   mat <role> <rows> <cols>
 *   <row>                          one line per row; entries separated by
 *                                  spaces, each entry m comma-separated
 *                                  residues (single residues for the
 *                                  base-field roles P and Pstar)
 *   end
 *
 * parse(serialize(x)) is the identity, byte-exact, for every kind.
 */

struct AttackReport {
    gpt::GptParams params;
    uint64_t seed = 0;
    size_t s = 0;
    size_t w = 0;
    std::vector<size_t> redundancy;
    std::vector<smart::SProbe> s_probes;
    std::vector<smart::RedundancyProbe> redundancy_probes;
    double verify_ratio = -1;  // < 0 means not recorded
    bool has_timings = false;
    double ms_compute_s = 0;
    double ms_redundancy = 0;
    double ms_recover = 0;
    double ms_total = 0;
};

std::string serialize_public_key(const gpt::PublicKey& pk);
std::string serialize_secret_key(const gpt::SecretKey& sk);
std::string serialize_ciphertext(const gpt::Ciphertext& ct);
std::string serialize_message(const ExtMatrix& msg);
std::string serialize_alt_key(const overbeck::AlternativeKey& alt);
std::string serialize_report(const AttackReport& report);

gpt::PublicKey parse_public_key(const std::string& text);
gpt::SecretKey parse_secret_key(const std::string& text);
gpt::Ciphertext parse_ciphertext(const std::string& text);
ExtMatrix parse_message(const std::string& text);
overbeck::AlternativeKey parse_alt_key(const std::string& text);
AttackReport parse_report(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ranklab::io

#endif  // RANKLAB_SERIALIZE_HPP
