#include "exou/partition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace exou {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw ParseError("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw NotDecreasing("parts must be weakly decreasing: " +
                                std::to_string(parts_[i]) + " before " +
                                std::to_string(parts_[i + 1]));
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::sorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    out.reserve(cols());
    for (int col = 1; col <= cols(); ++col) {
        int count = 0;
        for (int p : parts_) {
            if (p >= col) ++count;
        }
        out.push_back(count);
    }
    return Partition(std::move(out));
}

int Partition::diagonal_length() const {
    int b = 0;
    for (int i = 1; i <= rows(); ++i) {
        if (part(i) >= i) b = i;
    }
    return b;
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 1; i <= inner.rows(); ++i) {
        if (part(i) < inner.part(i)) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

const char* to_string(PartitionKind kind) {
    switch (kind) {
        case PartitionKind::TrivialRow: return "trivial-row";
        case PartitionKind::TrivialColumn: return "trivial-column";
        case PartitionKind::ShallowHook: return "shallow-hook";
        case PartitionKind::DeepHook: return "deep-hook";
        case PartitionKind::Proper: return "proper";
    }
    return "?";
}

Partition parse_partition(const std::string& text, bool sort_parts) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("expected bracketed partition, got '" + text + "'");
    s = s.substr(1, s.size() - 2);

    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string token;
        while (std::getline(ss, token, ',')) {
            if (token.empty())
                throw ParseError("empty part in '" + text + "'");
            long value = 0, repeat = 1;
            size_t caret = token.find('^');
            try {
                size_t used = 0;
                value = std::stol(token.substr(0, caret), &used);
                if (used != (caret == std::string::npos ? token.size() : caret))
                    throw ParseError("bad part '" + token + "'");
                if (caret != std::string::npos) {
                    std::string exp = token.substr(caret + 1);
                    repeat = std::stol(exp, &used);
                    if (used != exp.size())
                        throw ParseError("bad exponent '" + token + "'");
                }
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError("bad part '" + token + "' in '" + text + "'");
            }
            if (value < 0) throw ParseError("negative part in '" + text + "'");
            if (repeat < 0) throw ParseError("negative exponent in '" + text + "'");
            if (repeat > 4096 || parts.size() > 4096)
                throw ParseError("partition too long in '" + text + "'");
            for (long r = 0; r < repeat; ++r)
                parts.push_back(static_cast<int>(value));
        }
    }
    if (sort_parts) return Partition::sorted(std::move(parts));
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) { return p.conjugate(); }

PartitionClass classify(const Partition& p) {
    PartitionClass out;
    out.self_conjugate = p.is_self_conjugate();
    out.rows = p.rows();
    out.cols = p.cols();
    out.diagonal_length = p.diagonal_length();
    if (p.is_proper()) {
        out.kind = PartitionKind::Proper;
    } else if (p.is_hook()) {
        int n = p.size();
        int r = p.rows() - 1;
        out.kind = (r == 1 || r == n - 2) ? PartitionKind::ShallowHook
                                          : PartitionKind::DeepHook;
    } else if (p.rows() > 1) {
        out.kind = PartitionKind::TrivialColumn;
    } else {
        out.kind = PartitionKind::TrivialRow;
    }
    return out;
}

Partition partwise_sum(const Partition& p, const Partition& q) {
    std::vector<int> out;
    int rows = std::max(p.rows(), q.rows());
    out.reserve(rows);
    for (int i = 1; i <= rows; ++i) out.push_back(p.part(i) + q.part(i));
    return Partition(std::move(out));
}

namespace {

void partitions_rec(int remaining, int max_part, int rows_left,
                    std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (rows_left == 0) return;
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        acc.push_back(next);
        partitions_rec(remaining - next, next, rows_left - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_rows) {
    if (n < 0) return {};
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n > 0 ? n : 1, max_rows > 0 ? max_rows : n, acc, out);
    if (n == 0) out = {Partition{}};
    return out;
}

PartitionFamily::PartitionFamily(std::vector<Partition> members, int d)
    : members_(std::move(members)), d_(d) {
    if (d_ < 1) throw RowBound("state count d must be positive");
    for (const Partition& m : members_) {
        if (m.rows() > d_)
            throw RowBound("partition " + m.to_string() + " has " +
                           std::to_string(m.rows()) + " rows, more than d = " +
                           std::to_string(d_));
        total_size_ += m.size();
    }
}

PartitionFamily PartitionFamily::with_default_bound(
    std::vector<Partition> members) {
    int d = 1;
    for (const Partition& m : members) d = std::max(d, m.rows());
    return PartitionFamily(std::move(members), d);
}

bool PartitionFamily::is_self_conjugate_multiset() const {
    std::vector<Partition> a = sorted_members();
    std::vector<Partition> b;
    b.reserve(members_.size());
    for (const Partition& m : members_) b.push_back(m.conjugate());
    std::sort(b.begin(), b.end(), [](const Partition& x, const Partition& y) {
        return std::make_pair(x.size(), x.parts()) <
               std::make_pair(y.size(), y.parts());
    });
    return a == b;
}

bool PartitionFamily::all_members_self_conjugate() const {
    return std::all_of(members_.begin(), members_.end(),
                       [](const Partition& m) { return m.is_self_conjugate(); });
}

bool PartitionFamily::any_trivial_member() const {
    return std::any_of(members_.begin(), members_.end(),
                       [](const Partition& m) { return m.is_trivial(); });
}

bool PartitionFamily::all_members_hooks() const {
    return std::all_of(members_.begin(), members_.end(),
                       [](const Partition& m) { return m.is_hook(); });
}

std::vector<Partition> PartitionFamily::sorted_members() const {
    std::vector<Partition> out = members_;
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        return std::make_pair(x.size(), x.parts()) <
               std::make_pair(y.size(), y.parts());
    });
    return out;
}

bool PartitionFamily::same_multiset(const PartitionFamily& other) const {
    return sorted_members() == other.sorted_members();
}

std::string PartitionFamily::to_string() const {
    std::string out;
    for (size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ';';
        out += members_[i].to_string();
    }
    return out;
}

std::vector<Partition> parse_family_members(const std::string& text,
                                            bool sort_parts) {
    std::vector<Partition> out;
    std::string current;
    for (char c : text) {
        if (c == ';') {
            out.push_back(parse_partition(current, sort_parts));
            current.clear();
        } else {
            current += c;
        }
    }
    bool has_content =
        std::any_of(current.begin(), current.end(), [](char c) {
            return !std::isspace(static_cast<unsigned char>(c));
        });
    if (has_content) out.push_back(parse_partition(current, sort_parts));
    return out;
}

}  // namespace exou
