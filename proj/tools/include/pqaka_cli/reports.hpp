#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pqaka/crypto/kem.hpp"

namespace pqaka::cli {

struct BenchRow {
  std::string suite;
  bool available = false;
  std::string note;
  double ue_cost_ms = 0;  // KeyGen + Encaps + Decaps
  double hn_cost_ms = 0;  // Decaps + Encaps
  double ue_mad_ms = 0;   // median absolute deviation
  double hn_mad_ms = 0;
  std::size_t iterations = 0;
};

/// Times the per-party KEM work of one session: the UE generates its
/// ephemeral pair, encapsulates to pk_H and decapsulates c2; the HN
/// decapsulates c1 and encapsulates to pk_U.
BenchRow bench_suite(const crypto::KemSuite& suite, std::size_t iterations, std::uint64_t seed);
BenchRow bench_by_name(const std::string& name, std::size_t iterations, std::uint64_t seed);

struct SizeRow {
  std::string suite;
  bool available = false;
  std::string note;
  crypto::KemSizes kem{};
  std::size_t id_response = 0;
  std::size_t hn_to_sn_auth = 0;
  std::size_t challenge = 0;
  std::size_t response = 0;
};

/// KEM metadata plus encoded sizes measured from one honest session.
SizeRow size_by_name(const std::string& name, std::uint64_t seed);

void print_bench(std::ostream& out, const std::vector<BenchRow>& rows);
void print_sizes(std::ostream& out, const std::vector<SizeRow>& rows);
std::string bench_jsonl(const std::vector<BenchRow>& rows);
std::string sizes_jsonl(const std::vector<SizeRow>& rows);

/// Left-aligned text table.
std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

}  // namespace pqaka::cli
