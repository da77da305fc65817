"""The pinned 60-instance benchmark suite and its integrity manifest.

Six sizes, ten seeds each, drawn by the pinned generator in
:mod:`cellpack.instgen`.  The SHA-256 of each instance's canonical file text
is frozen here; the bench command regenerates the suite and refuses to run if
any digest drifts.  Golden copies of the files live under ``data/instances/``
and can be rebuilt with ``scripts/regenerate_suite.py``.
"""

from __future__ import annotations

import hashlib
from typing import Iterator

from .core import Instance
from .instgen import gen_uniform, render_instance_text

SUITE_SIZES = (10, 15, 20, 25, 30, 35)
SUITE_SEEDS = tuple(range(1, 11))


def suite_filename(n: int, seed: int) -> str:
    return f"uniform_n{n:02d}_s{seed:02d}.txt"


def suite_instances() -> Iterator[tuple[int, int, Instance]]:
    """Yield (n, seed, instance) in the fixed (n, seed) order."""
    for n in SUITE_SIZES:
        for seed in SUITE_SEEDS:
            yield n, seed, gen_uniform(n, seed)


def instance_digest(inst: Instance) -> str:
    return hashlib.sha256(render_instance_text(inst).encode("ascii")).hexdigest()


def verify_suite_instance(n: int, seed: int, inst: Instance) -> None:
    """Raise if a regenerated instance does not match the pinned digest."""
    name = suite_filename(n, seed)
    expected = SUITE_SHA256[name]
    actual = instance_digest(inst)
    if actual != expected:
        raise RuntimeError(
            f"benchmark suite mismatch for {name}: expected sha256 {expected}, got {actual}"
        )


# Filled in by scripts/regenerate_suite.py; do not edit by hand.
SUITE_SHA256: dict[str, str] = {
    "uniform_n10_s01.txt": "1f92183509bda03d58f12e616df2868723aa2ad9b908c01f5d88af8a88d135a8",
    "uniform_n10_s02.txt": "57b055ad80a63dae60b35c550328654ec431cf6c4cdad9278ebba0a872d592bf",
    "uniform_n10_s03.txt": "36e59b186961a12312c2337fe2bf6a803e48fba0b890a17c40aafcdceb3b0138",
    "uniform_n10_s04.txt": "9d231eac0e0c9fdae698c0aa3a792783e73dcca817cc821a4d7c8f645bff4446",
    "uniform_n10_s05.txt": "28ef92720e8bf4b78ee886e59b51ce8db8e82599cea44d9e3a7cb221d11a998d",
    "uniform_n10_s06.txt": "bfa55074fda1bcac05b73f404617ce179c55a34acdf3649a2570b6dc823fc7da",
    "uniform_n10_s07.txt": "45dcc034839619d3f147377c7a0aa93d395296a2ff921e0dfe1081cb3bcb7e60",
    "uniform_n10_s08.txt": "ce9f916040c36614889ead3a7fc8c8154ecbe48660c3ddcef222410056a5b642",
    "uniform_n10_s09.txt": "a5bb1ae2236757d64709fb7f67ae6ad919d9da533d076bb1662eefe3bdf8bd84",
    "uniform_n10_s10.txt": "f736a865cdecfc210e5e0e4323d3c1cc49b414fdbc359cb821b9c93a00337cdc",
    "uniform_n15_s01.txt": "2c627a7b4bab71bc25efb5b77159a22b9e27f97ff08b0db54f2f035b18dd562a",
    "uniform_n15_s02.txt": "69d1c86b78430f9c5237bf112d57d43ae171c7c70b8d213bec4ba3c1df137928",
    "uniform_n15_s03.txt": "5f9c53b702385ac616d60d47c3c260c13b5122c1bf0823f72f2edd89fb91ba7c",
    "uniform_n15_s04.txt": "6509fe2425dbedebf7f92cd036361bb1bcabc8719e6f4f07153b11a2b03701c8",
    "uniform_n15_s05.txt": "f2333fe00f3fb8e86dee2d201a38c5f61f3835fe9477a33269e01d4b0672c858",
    "uniform_n15_s06.txt": "188f30ab74a66203c129d1c305d34b951e89a1354b5669b6261b8db3ee0acdf3",
    "uniform_n15_s07.txt": "8d25bfa23a7619fc1f1658255a86ec581b0f9d6a117ea5ecc6bfcde7cbe269fd",
    "uniform_n15_s08.txt": "96d70b979415b65e5cd5591409f55c642da7a4eb82f88ac1a4df3db39b308fc7",
    "uniform_n15_s09.txt": "d819944b20353ab5334141529f6b6f9ced892953449c70a1c0765e99514beb89",
    "uniform_n15_s10.txt": "ea956c1c5a4ab87795166ae74fb5f0d889224ab5e4f8d615d46d0183c3367421",
    "uniform_n20_s01.txt": "18e27cc9a6f54232c869ebe1eea2ffbde980a9de8bdc0a96639657ecd2bdf178",
    "uniform_n20_s02.txt": "fb10339342742723855078f2c7d09d6339acaf89ed16b0b3c4db4b0576da98f2",
    "uniform_n20_s03.txt": "b84daae0135b38dc4dffdecdd17653f85f51c15f511ef562f77c0ead92d64ac7",
    "uniform_n20_s04.txt": "dd14bf78938609dfbfe3014eaef97e4338505e791d9a8dcbf66a03861c929553",
    "uniform_n20_s05.txt": "1b229361abb41616399ed479141a0b254791455c97eb5c8c55655f6c2c2c3c2e",
    "uniform_n20_s06.txt": "db2c386c0b7c28aee39682aec5197c97838af5e9fc5630b1f183b0ac2bb5e803",
    "uniform_n20_s07.txt": "633f81491960a0cf154f51e06960d022c35e851671b7d644f42237fe1c52ffdb",
    "uniform_n20_s08.txt": "10492a17ade6c523ee97ecc708f021a61f5f5c06a51df671af9419f247039c63",
    "uniform_n20_s09.txt": "cf0cbbae0855c7fcda3eed906fd9657a2b6ca4124119b4eb5f30ad700da8ec00",
    "uniform_n20_s10.txt": "27026a31dc70bf114374708b2c5f2b24455121283152fc95cc26affecabea493",
    "uniform_n25_s01.txt": "a6c04a9f087a29d30dd3d69795101fe4a36c67097fec2c8bcf39dc59b755e77d",
    "uniform_n25_s02.txt": "e664cf58a31aafd8a7cb36e8f0a38b8b3dd0b6e0ff69a0a61798e636fc5aae72",
    "uniform_n25_s03.txt": "33acc55d1462825399b866404a7bdce82bccab3a462278fffc1a9782e39e08b6",
    "uniform_n25_s04.txt": "fbb0b3059eeced0ba373a4a979d1005267a48f391c5e4273c582d577c7ea7cdd",
    "uniform_n25_s05.txt": "cba494a1b9556d96b5670d6b4c214f9c1dd729415c5c83e9e753f33c4f1835f4",
    "uniform_n25_s06.txt": "e5ddfa9289969928d13b635a511dc14014a3b33ac3e55d48ace0f0dcd410ee7a",
    "uniform_n25_s07.txt": "d6c5f831d4d27438a2d66705f56c44efba734477b7dc8ac2e835c9c511654485",
    "uniform_n25_s08.txt": "9bbc31708f3aa00e0d2f4d34b6599ea7025a97ec4e9b28d39f65b2b68450f319",
    "uniform_n25_s09.txt": "e57842a6d5e777bd7ee4d93c2b0b26ef63bdef5cdb91824ee6bfad65ceaa8134",
    "uniform_n25_s10.txt": "013370c85c0fba053037ddb1399cc9cff9248facbf6b1cd7a96fa55c502ce9e7",
    "uniform_n30_s01.txt": "5b59dfb9c2e30288523baa23c0610f811c3d213a6ab729385d80f234dd81da0a",
    "uniform_n30_s02.txt": "b8592bb2e753496075bd9c91690bcac5b2c83204e832e3e4d4c9e86abf4f5e9c",
    "uniform_n30_s03.txt": "fea7b92f66517266bc65058913b1b45513a928f865683ee02bc4314d750ebbd3",
    "uniform_n30_s04.txt": "601553142a2a7479fbe4211ae6f40c5e353f07e60e17f90c67fb963e01702906",
    "uniform_n30_s05.txt": "e8c4c313d44e430c996cc51ce22afe581f200eea88944cf6ec6eb2f1a8a62ed3",
    "uniform_n30_s06.txt": "14b1aa1e2e90b5e55780495de99baea819ac1dfeb1773723ea69c9f434fc5821",
    "uniform_n30_s07.txt": "23588236d29dbe49f13aff2073e7919a9338a9f4bcebb63569a0a3b96c713e7e",
    "uniform_n30_s08.txt": "26c19286c97845d5448c738d3e28a739c6c96139c8e0be9b652eb509867bd589",
    "uniform_n30_s09.txt": "1671d19d89555b47cc32fc0f938fa67618ebf055549c958da2588174cbd14fc4",
    "uniform_n30_s10.txt": "7990c1f86d569d2635382d0fa572cbfedb74790b5e2e8a161cb9781f6eaa21fa",
    "uniform_n35_s01.txt": "0c6903609188e795e69fa7fc6625c7b4c1e8a24ac906ebd784c6bff8fbd6043d",
    "uniform_n35_s02.txt": "ee752ce63cd72887a4d0fd3454e37c1b408e34d24385d7e55e27f372d0e77f3d",
    "uniform_n35_s03.txt": "1938e26bc08bb835eac28105c2b929be3c51aeb550a607de75204c8dab94f335",
    "uniform_n35_s04.txt": "db0d4acc5959dc2786fa137da3eeb738001db2cd4631bd20408cb7fa08ad3cb0",
    "uniform_n35_s05.txt": "d6f4ce05b8b9269dd3ff7dc646b7d62ea2703d39d3b5f2994a6908124ee92c16",
    "uniform_n35_s06.txt": "273112749510130ba55b97c4452adb7f4dc4bd1f501d6ec8dcbe93367a927617",
    "uniform_n35_s07.txt": "8a757ae05ec761aa23ccfb2182574b659c1fb22303ae848550ead52804c147ee",
    "uniform_n35_s08.txt": "027a0102e6e1e836d40e63bfe0d5f3a073882d400084e8d1801026a81a6dbe77",
    "uniform_n35_s09.txt": "787df90d443d01f1b4e00b4f472320a42c9091556777b973b40ecfc603152cf9",
    "uniform_n35_s10.txt": "b8a5921819c26e37335297d69f64a067340b585991dcdc990c64763eb5169a72",
}
