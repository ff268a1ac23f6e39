#include "evret/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "evret/errors.hpp"

namespace evret {

namespace {

struct Key {
    double key;
    double secondary;
    bool operator==(const Key&) const = default;
};

int cmp(const Key& a, const Key& b) {
    if (a.key != b.key) return a.key < b.key ? -1 : 1;
    if (a.secondary != b.secondary) return a.secondary < b.secondary ? -1 : 1;
    return 0;
}

// average ranks in descending key order, aligned to the sorted id list
std::vector<double> average_ranks(const RankedResult& r, const std::vector<std::string>& ids) {
    // r.docs is already sorted descending; equal keys are adjacent
    std::map<std::string, double> by_id;
    size_t i = 0;
    while (i < r.docs.size()) {
        size_t j = i;
        Key k{r.docs[i].key, r.docs[i].secondary};
        while (j < r.docs.size() && Key{r.docs[j].key, r.docs[j].secondary} == k) ++j;
        double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (size_t t = i; t < j; ++t) by_id[r.docs[t].id] = avg;
        i = j;
    }
    std::vector<double> out;
    out.reserve(ids.size());
    for (const std::string& id : ids) out.push_back(by_id.at(id));
    return out;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const size_t n = a.size();
    double ma = 0, mb = 0;
    for (size_t i = 0; i < n; ++i) { ma += a[i]; mb += b[i]; }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double sab = 0, saa = 0, sbb = 0;
    for (size_t i = 0; i < n; ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    if (saa == 0.0 || sbb == 0.0) return saa == sbb ? 1.0 : 0.0;
    return sab / std::sqrt(saa * sbb);
}

}  // namespace

PairMetrics compare_rankings(const RankedResult& a, const RankedResult& b) {
    std::vector<std::string> ids;
    for (const RankedDoc& d : a.docs) ids.push_back(d.id);
    std::sort(ids.begin(), ids.end());
    {
        std::vector<std::string> other;
        for (const RankedDoc& d : b.docs) other.push_back(d.id);
        std::sort(other.begin(), other.end());
        if (ids != other)
            throw MismatchedCorporaError("rankings cover different document sets");
    }

    PairMetrics m;
    const size_t n = ids.size();

    if (n == 0) {
        m.spearman = m.kendall = m.jaccard = 1.0;
        return m;
    }

    m.spearman = pearson(average_ranks(a, ids), average_ranks(b, ids));

    std::map<std::string, Key> ka, kb;
    for (const RankedDoc& d : a.docs) ka[d.id] = {d.key, d.secondary};
    for (const RankedDoc& d : b.docs) kb[d.id] = {d.key, d.secondary};
    long long concordant = 0, discordant = 0, ties_a = 0, ties_b = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            int da = cmp(ka[ids[i]], ka[ids[j]]);
            int db = cmp(kb[ids[i]], kb[ids[j]]);
            if (da == 0) ++ties_a;
            if (db == 0) ++ties_b;
            if (da == 0 || db == 0) continue;
            if (da == db) ++concordant;
            else ++discordant;
        }
    const long long n0 = static_cast<long long>(n) * (static_cast<long long>(n) - 1) / 2;
    const double denom = std::sqrt(static_cast<double>(n0 - ties_a)) *
                         std::sqrt(static_cast<double>(n0 - ties_b));
    if (denom == 0.0) m.kendall = ties_a == ties_b ? 1.0 : 0.0;
    else m.kendall = static_cast<double>(concordant - discordant) / denom;

    std::set<std::string> ra, rb;
    for (const RankedDoc& d : a.docs) if (d.retrieved) ra.insert(d.id);
    for (const RankedDoc& d : b.docs) if (d.retrieved) rb.insert(d.id);
    std::vector<std::string> uni, inter;
    std::set_union(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(uni));
    std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(inter));
    m.jaccard = uni.empty() ? 1.0
                            : static_cast<double>(inter.size()) / static_cast<double>(uni.size());
    return m;
}

std::optional<double> PrecisionRecall::precision() const {
    if (retrieved == 0) return std::nullopt;
    return static_cast<double>(hits) / retrieved;
}

std::optional<double> PrecisionRecall::recall() const {
    if (relevant == 0) return std::nullopt;
    return static_cast<double>(hits) / relevant;
}

PrecisionRecall precision_recall(const RankedResult& r, const Judgments& j) {
    PrecisionRecall pr;
    for (const auto& [id, rel] : j.relevant)
        if (rel) ++pr.relevant;
    for (const RankedDoc& d : r.docs) {
        if (!d.retrieved) continue;
        ++pr.retrieved;
        auto it = j.relevant.find(d.id);
        if (it != j.relevant.end() && it->second) ++pr.hits;
    }
    return pr;
}

std::optional<double> mean_interval_width(const RankedResult& r) {
    if (r.docs.empty()) return std::nullopt;
    double sum = 0;
    for (const RankedDoc& d : r.docs) {
        const auto* iv = std::get_if<IntervalValue>(&d.value);
        if (!iv) return std::nullopt;
        sum += iv->hi - iv->lo;
    }
    return sum / static_cast<double>(r.docs.size());
}

}  // namespace evret
