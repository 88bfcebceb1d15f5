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

#include "sigbft/crypto/keyfile.hpp"

#include <fstream>

#include "sigbft/crypto/ed25519.hpp"

namespace sigbft::crypto {

Bytes encode_keypair(const Keypair& kp) {
    Bytes body;
    body.push_back((uint8_t)kp.sk.scheme);
    Bytes sk = kp.sk.to_bytes();
    Bytes pk = kp.pk.to_bytes();
    body.insert(body.end(), sk.begin(), sk.end());
    body.insert(body.end(), pk.begin(), pk.end());

    Bytes record;
    put_u32_be(record, (uint32_t)body.size());
    record.insert(record.end(), body.begin(), body.end());
    return record;
}

Keypair decode_keypair(BytesView record) {
    ByteReader r(record);
    uint32_t len = r.u32_be();
    if (len != r.remaining()) throw std::invalid_argument("keypair record: bad length prefix");
    uint8_t tag = r.u8();
    Keypair kp;
    if (tag == (uint8_t)Scheme::kBls) {
        Bytes sk = r.take(kBlsSecretKeySize);
        Bytes pk = r.take(kBlsPublicKeySize);
        bls::Scalar scalar;
        if (!bls::Scalar::from_bytes_be(sk, scalar))
            throw std::invalid_argument("keypair record: non-canonical BLS scalar");
        kp.sk = SecretKey{Scheme::kBls, scalar, {}};
        if (!PublicKey::from_bytes(Scheme::kBls, pk, kp.pk))
            throw std::invalid_argument("keypair record: invalid BLS public key");
    } else if (tag == (uint8_t)Scheme::kEddsa) {
        Bytes seed = r.take(ed25519::kSeedSize);
        Bytes pk = r.take(ed25519::kPublicKeySize);
        std::array<uint8_t, ed25519::kSeedSize> seed_arr;
        std::copy(seed.begin(), seed.end(), seed_arr.begin());
        auto raw = ed25519::keygen(seed_arr);
        if (!std::equal(pk.begin(), pk.end(), raw.pk.begin()))
            throw std::invalid_argument("keypair record: public key does not match seed");
        kp.sk = SecretKey{Scheme::kEddsa, {}, raw.sk};
        kp.pk = PublicKey{Scheme::kEddsa, bls::G2::identity(), raw.pk};
    } else {
        throw std::invalid_argument("keypair record: unknown scheme tag");
    }
    if (r.remaining() != 0) throw std::invalid_argument("keypair record: trailing bytes");
    return kp;
}

void save_keypairs(const std::string& path, std::span<const Keypair> kps) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open keyfile for writing: " + path);
    for (const auto& kp : kps) {
        Bytes rec = encode_keypair(kp);
        out.write(reinterpret_cast<const char*>(rec.data()), (std::streamsize)rec.size());
    }
}

std::vector<Keypair> load_keypairs(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open keyfile: " + path);
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<Keypair> out;
    size_t pos = 0;
    while (pos < data.size()) {
        if (data.size() - pos < 4) throw std::invalid_argument("keyfile: truncated record");
        uint32_t len = 0;
        for (int i = 0; i < 4; ++i) len = len << 8 | data[pos + i];
        if (data.size() - pos - 4 < len) throw std::invalid_argument("keyfile: truncated record");
        out.push_back(decode_keypair(BytesView(data.data() + pos, 4 + len)));
        pos += 4 + len;
    }
    return out;
}

}  // namespace sigbft::crypto
