"""Independent FSIMc oracle.

Writes small PNG fixture pairs to tests/data/fsim/ and scores them with
piq.fsim (chromatic). The printed values are frozen into
tests/quality/fsim_oracle_test.cpp.
"""
import pathlib

import numpy as np
import piq
import torch
from PIL import Image

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "fsim"
SHAPES = [(48, 48), (64, 80), (72, 96), (96, 72)]


def to_tensor(a):
    return torch.tensor(a / 255.0).permute(2, 0, 1)[None].double()


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(3)
    for i, (h, w) in enumerate(SHAPES):
        y, x = np.mgrid[0:h, 0:w]
        ref = np.stack([0.5 + 0.4 * np.sin(x / 7 + c) * np.cos(y / 9 - c)
                        for c in range(3)], -1)
        ref[h // 4:h // 2, w // 3:w // 2] = [0.9, 0.2, 0.1]
        test = ref * 0.8 + 0.1 + rng.normal(0, 0.04 * (i + 1), ref.shape)
        if i == 3:
            test = test[..., ::-1]
        r8 = (np.clip(ref, 0, 1) * 255).round().astype(np.uint8)
        t8 = (np.clip(test, 0, 1) * 255).round().astype(np.uint8)
        Image.fromarray(r8).save(OUT / f"ref{i}.png")
        Image.fromarray(t8).save(OUT / f"test{i}.png")
        v = piq.fsim(to_tensor(t8), to_tensor(r8), data_range=1.0,
                     chromatic=True).item()
        print(f'    {{"test{i}.png", "ref{i}.png", {v:.10f}}},')


if __name__ == "__main__":
    main()
