#include "finfish/bijection.hpp"

#include <string>

#include "finfish/decomp.hpp"
#include "finfish/errors.hpp"
#include "finfish/waspwaist.hpp"

namespace finfish {

FightingFish phi(const Perm& p) { return fish_of_tree(tree_of_perm(p)); }

Perm phi_inverse(const FightingFish& f) {
    try {
        return perm_of_tree(tree_of_fish(f));
    } catch (const invalid_complex& e) {
        throw domain_error(std::string("not a fighting fish: ") + e.what());
    } catch (const invalid_fish& e) {
        throw domain_error(std::string("not a fighting fish: ") + e.what());
    }
}

TransferReport check_transfer(const Perm& p) {
    TransferReport r;
    r.perm = stats(p);
    r.fish = fish_stats(phi(p));
    r.size_ok = r.fish.size == r.perm.len + 1;
    r.lsize_ok = r.fish.lsize == r.perm.asc + 1;
    r.rsize_ok = r.fish.rsize == r.perm.des + 1;
    r.fin_ok = r.fish.fin == r.perm.slmax + 1;
    r.tails_ok = r.fish.tails == r.perm.sldes + 1;
    return r;
}

}  // namespace finfish
