#include "dhseq/sequence.hpp"

#include <istream>
#include <numeric>
#include <ostream>

#include "dhseq/error.hpp"

namespace dhseq {

u64 DHSequence::weight() const {
    return std::accumulate(bits.begin(), bits.end(), u64{0});
}

std::string DHSequence::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

DHSequence generate(const GeneralizedCyclotomy& cyclotomy) {
    const u64 n = cyclotomy.n();
    if (n > kMaxGeneratedPeriod) {
        throw InvalidArgument("period " + std::to_string(n) + " is too large to materialize");
    }
    DHSequence seq{cyclotomy.modulus(), cyclotomy.assignment(), BitVector(n)};
    for (u64 i = 0; i < n; ++i) seq.bits[i] = static_cast<std::uint8_t>(cyclotomy.bit(i));
    return seq;
}

DHSequence generate(const Modulus& modulus, const VectorAssignment& assignment) {
    return generate(GeneralizedCyclotomy(modulus, assignment));
}

int delta(u64 n) {
    if (n % 2 == 0) throw InvalidArgument("delta is defined for odd n");
    return n % 4 == 3 ? 1 : 0;
}

void write_sequence(std::ostream& out, const BitVector& bits) {
    for (auto b : bits) out.put(b ? '1' : '0');
    out.put('\n');
}

BitVector read_sequence(std::istream& in) {
    std::string line;
    std::getline(in, line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw ParseError("sequence file is empty");
    BitVector bits;
    bits.reserve(line.size());
    for (char c : line) {
        if (c != '0' && c != '1') {
            throw ParseError(std::string("unexpected character '") + c + "' in sequence file");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return bits;
}

void write_metadata(std::ostream& out, const DHSequence& seq) {
    out << "n=" << seq.n() << '\n'
        << "factors=" << seq.modulus.factor_string() << '\n'
        << "assignment=" << seq.assignment.to_string() << '\n'
        << "weight=" << seq.weight() << '\n';
}

std::map<std::string, std::string> read_metadata(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("metadata line without '=': " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

}  // namespace dhseq
