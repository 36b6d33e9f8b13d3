#include <baron/model.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace baron
{
    auto flip(Relation r) -> Relation
    {
        switch (r) {
        case Relation::less: return Relation::greater;
        case Relation::greater: return Relation::less;
        case Relation::equal: break;
        }
        return Relation::equal;
    }

    auto relation_symbol(Relation r) -> char
    {
        switch (r) {
        case Relation::less: return '<';
        case Relation::greater: return '>';
        case Relation::equal: break;
        }
        return '=';
    }

    Weighing::Weighing(std::vector<CoinLabel> left, std::vector<CoinLabel> right, Relation outcome) :
        _left(std::move(left)),
        _right(std::move(right)),
        _outcome(outcome)
    {
        std::ranges::sort(_left);
        std::ranges::sort(_right);
        if (_left.empty() && _right.empty())
            throw SchemeError("weighing has no coins on either pan");

        std::vector<CoinLabel> all;
        all.reserve(_left.size() + _right.size());
        std::ranges::merge(_left, _right, std::back_inserter(all));
        if (all.front() < 1)
            throw SchemeError("coin label " + std::to_string(all.front()) + " is not positive");
        if (auto dup = std::ranges::adjacent_find(all); dup != all.end())
            throw SchemeError("coin " + std::to_string(*dup) + " appears more than once in a weighing");
    }

    auto Weighing::swapped() const -> Weighing
    {
        return Weighing{_right, _left, flip(_outcome)};
    }

    auto Weighing::with_outcome(Relation r) const -> Weighing
    {
        Weighing result = *this;
        result._outcome = r;
        return result;
    }

    Scheme::Scheme(int n, std::vector<Weighing> weighings) :
        _n(n),
        _weighings(std::move(weighings))
    {
        if (_n < 1)
            throw SchemeError("scheme must have at least one coin");
        for (const auto & w : _weighings) {
            auto largest = std::max(w.left().empty() ? 0 : w.left().back(), w.right().empty() ? 0 : w.right().back());
            if (largest > _n)
                throw SchemeError("coin label " + std::to_string(largest) + " exceeds n = " + std::to_string(_n));
        }
    }

    Assignment::Assignment(std::vector<int> weight_of) :
        _weight_of(std::move(weight_of))
    {
        std::vector<bool> seen(_weight_of.size() + 1, false);
        for (int w : _weight_of) {
            if (w < 1 || w > static_cast<int>(_weight_of.size()) || seen[w])
                throw SchemeError("assignment is not a bijection onto [1..n]");
            seen[w] = true;
        }
    }

    auto Assignment::identity(int n) -> Assignment
    {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Assignment{std::move(w)};
    }

    auto Assignment::transposition(int n, CoinLabel a, CoinLabel b) -> Assignment
    {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        std::swap(w.at(a - 1), w.at(b - 1));
        return Assignment{std::move(w)};
    }

    auto Assignment::is_identity() const -> bool
    {
        for (std::size_t i = 0; i < _weight_of.size(); ++i)
            if (_weight_of[i] != static_cast<int>(i) + 1)
                return false;
        return true;
    }

    auto evaluate_weighing(const Assignment & a, const Weighing & w) -> Relation
    {
        long long diff = 0;
        for (auto c : w.left())
            diff += a.weight_of(c);
        for (auto c : w.right())
            diff -= a.weight_of(c);
        return diff < 0 ? Relation::less : diff > 0 ? Relation::greater : Relation::equal;
    }

    auto is_consistent(const Assignment & a, const Scheme & s) -> bool
    {
        return std::ranges::all_of(s.weighings(), [&](const Weighing & w) { return evaluate_weighing(a, w) == w.outcome(); });
    }

    auto make_weighing(std::vector<CoinLabel> left, std::vector<CoinLabel> right) -> Weighing
    {
        long long diff = 0;
        for (auto c : left)
            diff += c;
        for (auto c : right)
            diff -= c;
        auto r = diff < 0 ? Relation::less : diff > 0 ? Relation::greater : Relation::equal;
        return Weighing{std::move(left), std::move(right), r};
    }

    auto to_string(const Assignment & a) -> std::string
    {
        std::ostringstream out;
        for (int i = 0; i < a.n(); ++i)
            out << (i ? "," : "") << a.weights()[i];
        return out.str();
    }
}
