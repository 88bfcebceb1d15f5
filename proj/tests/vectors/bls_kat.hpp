// Known-answer vectors for the BLS12-381 backend, generated with
// @noble/curves 2.3.0 (an independent implementation). Hash-to-curve
// follows RFC 9380 suite BLS12381G1_XMD:SHA-256_SSWU_RO_.
#pragma once
#include <cstdint>

namespace kat {

struct XmdVec { const char* msg; const char* dst; unsigned len; const char* uniform; };
inline const XmdVec kXmd[] = {
    {"", "BLS_SIG_BLS12381G1_XMD:SHA-256_SSWU_RO_POP_", 32, "8b65c4a774c0bcc967259c2f11f60a9e90d2ff46a51b63e2ca7cef8c56cb83ce"},
    {"abc", "BLS_SIG_BLS12381G1_XMD:SHA-256_SSWU_RO_POP_", 32, "0faa4969c7819e6a3e035ba4a5025796c4cb518f71beea1bdd8c97a369677f16"},
    {"abcdef0123456789", "BLS_SIG_BLS12381G1_XMD:SHA-256_SSWU_RO_POP_", 128, "655b101b1110453f01ad41179249de5271b3d112ccb8a7e24de3a9cd6335c7767ff191d8307315a5fa2a0fa4a8c4f6f4e818f683a0f3169a9c7742fd193894ba7cc220d010897e7c05cf6bef2d63c543f7d246803965e9b14f6ea0cc48980446234290e97d4375480ffa38ba6fd98601ee69b1d0cc4246f28a10080c5e95e0df"},
    {"q128_qqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqqq", "BLS_SIG_BLS12381G1_XMD:SHA-256_SSWU_RO_POP_", 48, "2f1f1980781e006f3618c10167a0e34cee09b1360f21105454680f885cc0aa88a572239c468f0bbbb1c64f383f8be43e"},
};

struct H2cVec { const char* msg; const char* dst; const char* point; };  // compressed G1
inline const H2cVec kHashToG1[] = {
    {"", "BLS_SIG_BLS12381G1_XMD:SHA-256_SSWU_RO_POP_", "8c5dafb594be22a639a1b188e81316bde48d8a7538fb15c787b63879131acfe8091a28c8e567872846e4a08af45b8564"},
    {"abc", "BLS_SIG_BLS12381G1_XMD:SHA-256_SSWU_RO_POP_", "a13964470939e806ca5ca96b348ab13af3f06a7d9dc4e8a0cf20d8a81a6d8f5a692c67424228d45d749e7832d27cea79"},
    {"abcdef0123456789", "BLS_SIG_BLS12381G1_XMD:SHA-256_SSWU_RO_POP_", "a466d410f6e0b0a439823353ac6a48874743c5baf81755eb6ecbe4bbfbbd23d385bc7506a0f8379e18edfadc37c68995"},
    {"a512_aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa", "BLS_SIG_BLS12381G1_XMD:SHA-256_SSWU_RO_POP_", "8b3b1da3ec60a6b79efe379690161b08c23db4615e273baf81e05d02f8f6d7149a1e552dcdc3f933f96ef483e1a831dc"},
    {"", "QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_", "852926add2207b76ca4fa57a8734416c8dc95e24501772c814278700eed6d1e4e8cf62d9c09db0fac349612b759e79a1"},
    {"abc", "QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_", "83567bc5ef9c690c2ab2ecdf6a96ef1c139cc0b2f284dca0a9a7943388a49a3aee664ba5379a7655d3c68900be2f6903"},
    {"abcdef0123456789", "QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_", "91e0b079dea29a68f0383ee94fed1b940995272407e3bb916bbf268c263ddd57a6a27200a784cbc248e84f357ce82d98"},
    {"a512_aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa", "QUUX-V01-CS02-with-BLS12381G1_XMD:SHA-256_SSWU_RO_", "a77f34d3e00f846cc903d4a29cd8de394c2f2b7052ed1643ce68bbdccd17dcbf5f9eae943b472af54af1979824e2b742"},
};

struct MulVec { const char* k; const char* g1; const char* g2; };  // k*G compressed
inline const MulVec kScalarMul[] = {
    {"1", "97f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c6bb", "93e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213945d57e5ac7d055d042b7e024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8"},
    {"2", "a572cbea904d67468808c8eb50a9450c9721db309128012543902d0ac358a62ae28f75bb8f1c7c42c39a8c5529bf0f4e", "aa4edef9c1ed7f729f520e47730a124fd70662a904ba1074728114d1031e1572c6c886f6b57ec72a6178288c47c335771638533957d540a9d2370f17cc7ed5863bc0b995b8825e0ee1ea1e1e4d00dbae81f14b0bf3611b78c952aacab827a053"},
    {"5", "b0e7791fb972fe014159aa33a98622da3cdc98ff707965e536d8636b5fcc5ac7a91a8c46e59a00dca575af0f18fb13dc", "80fb837804dba8213329db46608b6c121d973363c1234a86dd183baff112709cf97096c5e9a1a770ee9d7dc641a894d60411a5de6730ffece671a9f21d65028cc0f1102378de124562cb1ff49db6f004fcd14d683024b0548eff3d1468df2688"},
    {"73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000000", "b7f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeffb3af00adb22c6bb", "b3e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213945d57e5ac7d055d042b7e024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8"},
    {"53ce3dbcdf8154ba8b6e59599c3c90a68abb349a6a6764afed7dff634c032bd", "9285ccec17c9920f1b3269c32523c358be2991c236c363071381d1d8d5c87bda14900ce2016cbabc6bfb20c1b650fe42", "9528ae24b799a52f5b0bef5e91909d4e055b43c0719bd9bf9adae7bfb87a97d01a74d8f9bc90d25b2000a0dfc6acd0960678af45b775fc0319b6a1e537a89fc6a8a998828f2352f772b0206c1b19a2c594c75ecc2dd55eea1bc95327eaace9f0"},
    {"a3c59f25ea22be7d2e49b9b0e453f44c6e6a739a9828d26ed1f0f9cb02b6e8f", "af7cd5b3089c88636b086910053ece37c743bb2e2674a96451e20951b53e4e774969daea3d076c2a5d457565e7650993", "984397750db8e9850ef0ecc8dae7274fdc7ebdda2316f4d802312a942cd18a9832454dae91f80eccb3a461b8fdd1315c152acdd518602e1b1946cfa28db988b79f9d7d296cdecd46875a258de72b7edafc544101e6a81effc4ea97aa571cb8f1"},
};

struct G2Affine { const char* xc0; const char* xc1; const char* yc0; const char* yc1; const char* comp; };
inline const G2Affine kG2Points[] = {
    {"024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8", "13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213945d57e5ac7d055d042b7e", "0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a695160d12c923ac9cc3baca289e193548608b82801", "0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab572e99ab3f370d275cec1da1aaa9075ff05f79be", "93e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213945d57e5ac7d055d042b7e024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8"},
    {"1638533957d540a9d2370f17cc7ed5863bc0b995b8825e0ee1ea1e1e4d00dbae81f14b0bf3611b78c952aacab827a053", "0a4edef9c1ed7f729f520e47730a124fd70662a904ba1074728114d1031e1572c6c886f6b57ec72a6178288c47c33577", "0468fb440d82b0630aeb8dca2b5256789a66da69bf91009cbfe6bd221e47aa8ae88dece9764bf3bd999d95d71e4c9899", "0f6d4552fa65dd2638b361543f887136a43253d9c66c411697003f7a13c308f5422e1aa0a59c8967acdefd8b6e36ccf3", "aa4edef9c1ed7f729f520e47730a124fd70662a904ba1074728114d1031e1572c6c886f6b57ec72a6178288c47c335771638533957d540a9d2370f17cc7ed5863bc0b995b8825e0ee1ea1e1e4d00dbae81f14b0bf3611b78c952aacab827a053"},
    {"0411a5de6730ffece671a9f21d65028cc0f1102378de124562cb1ff49db6f004fcd14d683024b0548eff3d1468df2688", "00fb837804dba8213329db46608b6c121d973363c1234a86dd183baff112709cf97096c5e9a1a770ee9d7dc641a894d6", "19b5e8f5d4a72f2b75811ac084a7f814317360bac52f6aab15eed416b4ef9938e0bdc4865cc2c4d0fd947e7c6925fd14", "093567b4228be17ee62d11a254edd041ee4b953bffb8b8c7f925bd6662b4298bac2822b446f5b5de3b893e1be5aa4986", "80fb837804dba8213329db46608b6c121d973363c1234a86dd183baff112709cf97096c5e9a1a770ee9d7dc641a894d60411a5de6730ffece671a9f21d65028cc0f1102378de124562cb1ff49db6f004fcd14d683024b0548eff3d1468df2688"},
    {"16d1d701635e2c7efd2155066a7687b9006816b30185b3c6a6db38f4a69f675ae7013fc9f94cd64248b951767d65abcd", "105f1bcc6c11223525371bfbb4b95af92d3c3bdab4ebb242d4a77eebe07aede0adfc50f8189b740b403d0f18cd340529", "0408815212a540680b68660ca3d74621367d309a8648dfabef2b6bb85a889505e48d2af9f63c54a2d9aa328240d80f3c", "02d69bff3a0f0871ffe4d30abb9ca232492a9930bf9ab8af265d98e5978d8ef01595c154521037b52c1e5dc46fd8b570", "905f1bcc6c11223525371bfbb4b95af92d3c3bdab4ebb242d4a77eebe07aede0adfc50f8189b740b403d0f18cd34052916d1d701635e2c7efd2155066a7687b9006816b30185b3c6a6db38f4a69f675ae7013fc9f94cd64248b951767d65abcd"},
};

inline const char* kG1IdentityCompressed = "c00000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000";
inline const char* kG2IdentityCompressed = "c00000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000000";

inline const char* kPairingG1G2[12] = {
    "1250ebd871fc0a92a7b2d83168d0d727272d441befa15c503dd8e90ce98db3e7b6d194f60839c508a84305aaca1789b6",
    "089a1c5b46e5110b86750ec6a532348868a84045483c92b7af5af689452eafabf1a8943e50439f1d59882a98eaa0170f",
    "1368bb445c7c2d209703f239689ce34c0378a68e72a6b3b216da0e22a5031b54ddff57309396b38c881c4c849ec23e87",
    "193502b86edb8857c273fa075a50512937e0794e1e65a7617c90d8bd66065b1fffe51d7a579973b1315021ec3c19934f",
    "01b2f522473d171391125ba84dc4007cfbf2f8da752f7c74185203fcca589ac719c34dffbbaad8431dad1c1fb597aaa5",
    "018107154f25a764bd3c79937a45b84546da634b8f6be14a8061e55cceba478b23f7dacaa35c8ca78beae9624045b4b6",
    "19f26337d205fb469cd6bd15c3d5a04dc88784fbb3d0b2dbdea54d43b2b73f2cbb12d58386a8703e0f948226e47ee89d",
    "06fba23eb7c5af0d9f80940ca771b6ffd5857baaf222eb95a7d2809d61bfe02e1bfd1b68ff02f0b8102ae1c2d5d5ab1a",
    "11b8b424cd48bf38fcef68083b0b0ec5c81a93b330ee1a677d0d15ff7b984e8978ef48881e32fac91b93b47333e2ba57",
    "03350f55a7aefcd3c31b4fcb6ce5771cc6a0e9786ab5973320c806ad360829107ba810c5a09ffdd9be2291a0c25a99a2",
    "04c581234d086a9902249b64728ffd21a189e87935a954051c7cdba7b3872629a4fafc05066245cb9108f0242d0fe3ef",
    "0f41e58663bf08cf068672cbd01a7ec73baca4d72ca93544deff686bfd6df543d48eaa24afe47e1efde449383b676631",
};
inline const char* kPairing3G1_5G2[12] = {
    "12a0076a4a1f0498f1aad6944b5d1271eb61381d19f444ee867b8e2e2077f2d0c438a706fd165a27dd36fc98860e8d2a",
    "0a659eeee23850abc9f0cbeea730d08dea71b51b48a642481d7617be41a6897bb9beaca5432d327c951321c1f5bd79f2",
    "0a6abe49aa2f02033b4fda2dd2553925e2c3addbcdd99b1c78d2fea45df477bf5414dec2866bcbcbd182f31a6fa3bbb2",
    "1662059fd0ab52364c2814a8e66c4d6fc8c4b4b037e5e6d7886b454608d4242a854d2c6518f2708ee36bd1795112de89",
    "1376af24809aef68d691619e3d42bed7bbb43d03ccbfa31cf05fa3b14b7336ecd5bbcfd5fd0dec705b6b486cf91a4a37",
    "060465b208a9981b8eccb9d8a1f02cc0c6c92a4f47d1485e755ff1c24d87478ebe85abb4dd4895269af84f23afa84668",
    "0cc4b1acdb82976dd93403b8801b316e5dd7cfa8e0b5892218eca8ce26ffce117ce3cd0d37fa68c52dffcacd18965262",
    "16a283f5a2a2f9269cea0acc04092bfaf9ef9bc206add391f6792a0029a10067ac2c46fabdf9c0a6121e94de1ba8c4c4",
    "071f92c79a2dc21b5905ee88d9f6adb18c78ec457448587186054cf8ab9a19d15f70193f882f422b794e3f1a18d5fc90",
    "0cf34ddfa181da8e4b7cb9deb0b0a119daee08d5cbae1bc7cd11a5c22e7c39223a02e476025d4f3882463909875a4fbd",
    "0ad9e6cdd6f7ca48eac6474d43cf11fbd2b1eed3b6c36a55d7be4da8e381cd9c9c2766249752a43a747a3a20ed73b970",
    "0b2ac4004e3062b4c83d3c73f121f011afe4e5ce5f7c9defefc7664ef04e01d864d5a2525bfd007d12f4425986b8fc4e",
};

struct SigVec { const char* sk; const char* pk; const char* msg; const char* sig; };
inline const SigVec kSign[] = {
    {"101112131415161718191a1b1c1d1e1f202122232425262728292a2b2c2d2e", "937138b838dfef2da5afddf8528254d3ba2fdb13a7fdd8e9e50fd698c7e52d71c4f1bb00f08733dca338cb25a899641901349dc9cd298e16f519cb2a7c22197c4a340416084e7f6d2ad383aa4492dd40da5cad47e765f759913ef97eeeb7057c", "sample vote digest 00", "b93ea131c985c0456c0326544792c0488064b555e7d72f4d46a0116aa637a2aad0f281cb9a66f7f680b77379b059c1d4"},
    {"47b8192d77bf871b62e87859d653922725724a5c031afeabc60bcef5ff665138", "a4b8f49c3bac0247a09487049492b0ed99cf90c56263141daa35f011330d3ced3f3ad78d252c51a3bb42fc7d8f1825940bc2357c6782bbb6a078d9e171fc7a81f7bd8ca73eb485e76317359908bb09bd372fd362a637512a9d48019b383e5489", "sample vote digest 00", "a0ce70d4ded7edb965489c569c6fd3b2fe2f30a584c955f3d65171d34753cce2085720fa087216235162fc898958790f"},
    {"328388aff0d4a5b7dc9205abd374e7e98f3cd9f3418edb4eafda5fb16473d216", "b0b39dda41e997feedd65253bd98bb1a150584dc23aca4c16d967b725ce86736ccdd33845de3058aafda88485750759908fd5505c6c3daf58fde81bdadbbefbc625dd9885faef3fca406a086f743d5eab6b6cb36b1984cbf08c6a4effcb3018d", "sample vote digest 00", "8e019bb3286ab1ab90acda839e0183974420d1a826362a5a87c5fb8d1695521b9e3c361918ef7fe09378474c996dc2c2"},
};
inline const char* kAggSig3 = "b990fa872fb8394a5fac9176a880e82e573aaf041223e7eacecd650ea1cc012816461afa5767e814cec80b83a12c1a99";
inline const char* kAggPk3 = "916ffa319dca0fe3dedd426c5d181d6cc3e9ea7939f4a8f061342ef0b599a35240fa282717acd49eec594efcc924b26e064a50a0bda58f5969e1a51a138703d1518efb588c69cddb2d022ba89ccc7721e0221462fe73051299500f71c48c37fa";

}  // namespace kat
