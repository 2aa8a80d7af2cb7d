import json
from pathlib import Path

import tfcahn as tfc
from tfcahn.fracops import l1_weights
from tfcahn.oracle import compute_S
from tfcahn.rng import SplitMix64


def main() -> None:
    outputs_dir = Path(__file__).resolve().parent / "outputs"
    outputs_dir.mkdir(parents=True, exist_ok=True)

    gen = SplitMix64(42)
    u64 = [int(v) for v in gen.next_u64(3)]
    order = tfc.FractionalOrder(alpha=0.5)

    payload = {
        "splitmix64": {
            "seed42": u64,
            "seed42_mantissa53": [v >> 11 for v in u64],
            "seed0_first": int(SplitMix64(0).next_u64(1)[0]),
        },
        "l1": {
            "alpha": 0.5,
            "weights": [float(a) for a in l1_weights(order, 4).a],
            "tau": 0.01,
            "scale": order.l1_scale(0.01),
        },
        "profile_S": compute_S(),
    }

    with (outputs_dir / "golden.json").open("w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
