//! Algorithm dispatch by CLI token.

use cbp_core::algo::{
    best_fit, first_fit, next_fit, worst_fit, BalancedPseudo, OnlineAlgorithm, Pseudo, TieBreak,
};

pub const TOKENS: [&str; 6] = ["nf", "ff", "bf", "wf", "pseudo", "bap"];

pub fn by_token(token: &str, tiebreak: TieBreak) -> Option<Box<dyn OnlineAlgorithm>> {
    Some(match token {
        "nf" => Box::new(next_fit()),
        "ff" => Box::new(first_fit(tiebreak)),
        "bf" => Box::new(best_fit(tiebreak)),
        "wf" => Box::new(worst_fit(tiebreak)),
        "pseudo" => Box::new(Pseudo::new()),
        "bap" => Box::new(BalancedPseudo::new(tiebreak)),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_token_resolves() {
        for token in TOKENS {
            let alg = by_token(token, TieBreak::MinIndex).unwrap();
            assert_eq!(alg.name(), token);
        }
        assert!(by_token("harmonic", TieBreak::MinIndex).is_none());
    }
}
