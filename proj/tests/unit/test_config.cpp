#include <gtest/gtest.h>

#include "nsspec/error.hpp"
#include "nsspec/harness/config.hpp"

using namespace nsspec;

TEST(Config, DefaultsFromEmptyObject) {
  const ExperimentConfig cfg = parse_config("{}");
  EXPECT_EQ(cfg.kind, ExperimentKind::VerifyLemmas);
  EXPECT_EQ(cfg.seed, 1u);
  EXPECT_EQ(cfg.samples.sq, 10000);
  EXPECT_EQ(cfg.model.type, ModelType::Abstract);
}

TEST(Config, ReadsNestedFields) {
  const ExperimentConfig cfg = parse_config(R"({
    "kind": "sweep", "seed": 18446744073709551615,
    "profile": {"p": 3, "tau": 0.25},
    "model": {"type": "schrodinger", "grid": {"d": 2, "n": 8, "h": 0.5},
              "potential": {"kind": "pavlov_decay", "amplitude": [0, 2], "decay": 0.5},
              "scales": [1, 3]}
  })");
  EXPECT_EQ(cfg.kind, ExperimentKind::Sweep);
  EXPECT_EQ(cfg.seed, 18446744073709551615ull);
  EXPECT_EQ(cfg.profile.p, 3.0);
  EXPECT_EQ(cfg.model.grid.n, 8);
  EXPECT_EQ(cfg.model.potential.kind, PotentialKind::PavlovDecay);
  EXPECT_EQ(cfg.model.potential.amplitude, Complex(0.0, 2.0));
  EXPECT_EQ(cfg.model.scales, (std::vector<double>{1.0, 3.0}));
}

TEST(Config, RejectsUnknownKeysWithPath) {
  try {
    parse_config(R"({"model": {"dimm": 3}})");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("model.dimm"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_config(R"({"sede": 1})"), ConfigError);
}

TEST(Config, RejectsBadValues) {
  EXPECT_THROW(parse_config("{"), ConfigError);
  EXPECT_THROW(parse_config(R"({"kind": "plot"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"seed": -1})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"seed": "one"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"model": {"dim": 0}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"grids": {"disk_radius": 1.0}})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"symbol": {"dims": [5], "p": 2}})"), ConfigError);
  // Schrodinger constraints: p >= 2 and p > d/2
  EXPECT_THROW(parse_config(R"({"profile": {"p": 2}, "model": {"type": "schrodinger",
                                 "grid": {"d": 4, "n": 3, "h": 1}}})"),
               ConfigError);
  EXPECT_THROW(parse_config(R"({"model": {"type": "schrodinger", "scales": []}})"), ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
}

TEST(Config, CanonicalJsonAndDigest) {
  const ExperimentConfig a = parse_config(R"({"seed": 4, "kind": "bgk"})");
  const ExperimentConfig b = parse_config(R"({"kind": "bgk", "seed": 4})");
  EXPECT_EQ(canonical_json(a), canonical_json(b));
  EXPECT_EQ(fnv1a64(canonical_json(a)), fnv1a64(canonical_json(b)));
  EXPECT_NE(canonical_json(a), canonical_json(parse_config(R"({"kind": "bgk", "seed": 5})")));
  // FNV-1a reference values
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(parse_config(canonical_json(a)).seed, 4u);
}
