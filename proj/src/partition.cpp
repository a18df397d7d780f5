#include "logchern/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "logchern/errors.hpp"

namespace logchern {

Partition::Partition(std::vector<int> parts, std::optional<int> context_rank)
    : parts_(std::move(parts)), context_rank_(context_rank) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw UsageError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  if (context_rank_) {
    if (*context_rank_ < 1) throw UsageError("context rank must be positive");
    if (length() > *context_rank_) {
      throw UsageError("partition " + Partition(parts_).to_string() + " has more than " + std::to_string(*context_rank_) + " parts");
    }
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&](bool allow_empty) {
    if (token.empty()) {
      if (!allow_empty) throw UsageError("empty entry in partition '" + std::string(text) + "'");
      return;
    }
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw UsageError("bad partition entry '" + token + "'");
      parts.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("bad partition entry '" + token + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      flush(false);
    } else {
      token += c;
    }
  }
  flush(parts.empty());
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int r) const {
  if (length() > r) throw UsageError("partition " + to_string() + " does not fit in rank " + std::to_string(r));
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(r), 0);
  return out;
}

bool Partition::is_column() const {
  return !parts_.empty() && std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

std::string Partition::to_string() const {
  std::vector<int> shown = context_rank_ ? padded(*context_rank_) : parts_;
  if (shown.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < shown.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(shown[i]);
  }
  return out;
}

}  // namespace logchern
