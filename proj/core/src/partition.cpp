#include "plie/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace plie {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("Partition: empty part list");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
        n_ += parts_[i];
    }
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        mult_.push_back(static_cast<std::int64_t>(j - i));
        i = j;
    }
}

Partition Partition::dual() const {
    std::vector<std::int64_t> d;
    for (std::int64_t i = 1; i <= parts_[0]; ++i) {
        std::int64_t count = 0;
        for (std::int64_t part : parts_)
            if (part >= i) ++count;
        d.push_back(count);
    }
    return Partition(d);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::vector<std::int64_t> parts;
    std::string body = s;
    if (!body.empty() && body.front() == '(') body = body.substr(1);
    if (!body.empty() && body.back() == ')') body.pop_back();
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        std::int64_t v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(parts);
}

namespace {

void gen_partitions(std::int64_t remaining, std::int64_t max_part,
                    std::vector<std::int64_t>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        gen_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> all_partitions(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("all_partitions: n must be >= 1");
    std::vector<Partition> out;
    std::vector<std::int64_t> prefix;
    gen_partitions(n, n, prefix, out);
    return out;
}

}  // namespace plie
