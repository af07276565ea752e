#include <gtest/gtest.h>

#include "pqaka/random.hpp"
#include "pqaka/wire.hpp"

using namespace pqaka;
using namespace pqaka::wire;

namespace {

std::vector<Message> samples() {
  SeededRandom rng(17);
  const Autn autn{rng.draw<32>(), rng.draw<32>()};
  return {
      IdRequestMsg{},
      IdResponseMsg{rng.bytes(768), rng.bytes(100), rng.draw<32>(), "hn.mnc001.mcc001"},
      SnToHnIdentMsg{rng.bytes(32), rng.bytes(90), rng.draw<32>(), rng.draw<32>()},
      HnToSnAuthMsg{autn, rng.draw<32>(), rng.bytes(68), rng.bytes(32)},
      HnToSnAuthMsg{autn, rng.draw<32>(), rng.bytes(68), std::nullopt},
      ChallengeMsg{autn, rng.bytes(4481)},
      ChallengeMsg{autn, std::nullopt},
      ResponseMsg{rng.draw<32>()},
      ConfirmMsg{true},
      ConfirmMsg{false},
      GutiIdMsg{rng.draw<16>()},
      GutiSnToHnMsg{"imsi-001010000000001", rng.draw<32>(), rng.draw<32>()},
      GutiAssignMsg{rng.draw<16>(), rng.draw<32>()},
      SecuredMsg{rng.bytes(83)},
      HnAbortMsg{},
  };
}

}  // namespace

TEST(Wire, EveryMessageRoundTrips) {
  for (const auto& m : samples()) {
    const Bytes b = encode(m);
    EXPECT_EQ(peek_type(b), type_of(m));
    const Message back = decode(b);
    EXPECT_EQ(back, m) << type_name(type_of(m));
    EXPECT_EQ(encode(back), b);
  }
}

TEST(Wire, LayoutIsTagThenLengthPrefixedFields) {
  const Bytes b = encode(ResponseMsg{Block256{}});
  ASSERT_EQ(b.size(), 1u + 4 + 32);
  EXPECT_EQ(b[0], 0x06);
  EXPECT_EQ(b[4], 32);
  EXPECT_EQ(encode(ChallengeMsg{Autn{}, std::nullopt}).back(), 0);
  EXPECT_EQ(encode(IdRequestMsg{}), Bytes{0x01});
}

TEST(Wire, EveryTruncationIsRejected) {
  for (const auto& m : samples()) {
    const Bytes b = encode(m);
    for (std::size_t n = 0; n < b.size(); ++n) {
      EXPECT_THROW(decode(ByteView(b).first(n)), ParseError) << type_name(type_of(m)) << " " << n;
    }
  }
}

TEST(Wire, TrailingBytesAreRejected) {
  for (const auto& m : samples()) {
    Bytes b = encode(m);
    b.push_back(0);
    EXPECT_THROW(decode(b), ParseError);
  }
}

TEST(Wire, MalformedFieldsAreRejected) {
  EXPECT_THROW(decode(Bytes{0x00}), ParseError);
  EXPECT_THROW(decode(Bytes{0x0d}), ParseError);
  EXPECT_THROW(decode(Bytes{0x07, 0, 0, 0, 1, 2}), ParseError);  // flag 2
  Bytes guti{0x08, 0, 0, 0, 15};
  guti.resize(guti.size() + 15);
  EXPECT_THROW(decode(guti), ParseError);
  Bytes challenge = encode(ChallengeMsg{Autn{}, std::nullopt});
  challenge.back() = 2;  // presence flag
  EXPECT_THROW(decode(challenge), ParseError);
  Bytes bad_utf8 = encode(GutiSnToHnMsg{"ab", Block256{}, Block256{}});
  bad_utf8[5] = 0xc3;
  bad_utf8[6] = 0x28;
  EXPECT_THROW(decode(bad_utf8), ParseError);
}

TEST(Wire, EncoderRejectsEmptyRequiredFields) {
  EXPECT_THROW(encode(IdResponseMsg{{}, Bytes{1}, Tag256{}, "hn"}), EncodingError);
  EXPECT_THROW(encode(IdResponseMsg{Bytes{1}, Bytes{1}, Tag256{}, ""}), EncodingError);
  EXPECT_THROW(encode(ChallengeMsg{Autn{}, Bytes{}}), EncodingError);
  EXPECT_THROW(encode(GutiSnToHnMsg{std::string("\xff"), Block256{}, Block256{}}), EncodingError);
}

TEST(Wire, DecodeAsChecksTheType) {
  const Bytes b = encode(ResponseMsg{Block256{}});
  EXPECT_NO_THROW(decode_as<ResponseMsg>(b));
  EXPECT_THROW(decode_as<ConfirmMsg>(b), ParseError);
}

TEST(Wire, RandomBytesNeverCrashTheDecoder) {
  SeededRandom rng(99);
  for (int i = 0; i < 5000; ++i) {
    Bytes b = rng.bytes(1 + (i % 80));
    b[0] = static_cast<std::uint8_t>(1 + (b[0] % 12));
    try {
      const auto m = decode(b);
      EXPECT_EQ(encode(m), b);
    } catch (const ParseError&) {
    }
  }
}
