// Copyright 2026 The sigbft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sigbft/netsim/cost_model.hpp"

#include <fstream>
#include <map>

namespace sigbft::sim {

void CryptoCostModel::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write calibration file: " + path);
    auto dump = [&](const char* prefix, const PerScheme& s) {
        out << prefix << ".sign_ns = " << s.sign_ns << "\n";
        out << prefix << ".verify_ns = " << s.verify_ns << "\n";
        out << prefix << ".aggregate_share_ns = " << s.aggregate_share_ns << "\n";
        out << prefix << ".key_addition_ns = " << s.key_addition_ns << "\n";
        out << prefix << ".batch_item_ns = " << s.batch_item_ns << "\n";
    };
    dump("eddsa", eddsa);
    dump("bls", bls);
}

CryptoCostModel CryptoCostModel::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read calibration file: " + path);
    std::map<std::string, uint64_t> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = std::stoull(value);
    }
    CryptoCostModel m;
    auto fill = [&](const std::string& prefix, PerScheme& s) {
        s.sign_ns = kv.at(prefix + ".sign_ns");
        s.verify_ns = kv.at(prefix + ".verify_ns");
        s.aggregate_share_ns = kv.at(prefix + ".aggregate_share_ns");
        s.key_addition_ns = kv.at(prefix + ".key_addition_ns");
        s.batch_item_ns = kv.at(prefix + ".batch_item_ns");
    };
    fill("eddsa", m.eddsa);
    fill("bls", m.bls);
    return m;
}

}  // namespace sigbft::sim
