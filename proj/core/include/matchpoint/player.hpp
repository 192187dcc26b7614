#ifndef MATCHPOINT_PLAYER_HPP
#define MATCHPOINT_PLAYER_HPP

namespace matchpoint {

enum class Player { A, B };

constexpr Player opponent(Player who) {
    return who == Player::A ? Player::B : Player::A;
}

constexpr char player_tag(Player who) { return who == Player::A ? 'A' : 'B'; }

}  // namespace matchpoint

#endif
