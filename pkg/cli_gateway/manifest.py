import hashlib
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, Field

from config import TOOL_VERSION
from errors import ConfigError, CorpusIOError
from .run_config import RunConfig

MANIFEST_NAME = "manifest.json"


def file_sha256(path: Path) -> str:
    digest = hashlib.sha256()
    try:
        with path.open("rb") as handle:
            for chunk in iter(lambda: handle.read(1 << 16), b""):
                digest.update(chunk)
    except OSError as e:
        raise CorpusIOError(f"cannot read {path}: {e}") from e
    return digest.hexdigest()


class InputDigest(BaseModel):
    name: str
    sha256: str


class RunManifest(BaseModel):
    """Provenance for an output directory. Carries no timestamps or absolute
    paths, so identical runs write identical manifests."""

    tool_version: str = TOOL_VERSION
    command: str
    config_hash: str
    config: Dict[str, Any]
    inputs: List[InputDigest] = Field(default_factory=list)
    outputs: List[str] = Field(default_factory=list)
    counts: Dict[str, int] = Field(default_factory=dict)


def build_manifest(
    command: str,
    run: RunConfig,
    inputs: Sequence[Path],
    outputs: Sequence[str],
    counts: Optional[Dict[str, int]] = None,
) -> RunManifest:
    return RunManifest(
        command=command,
        config_hash=run.config_hash(),
        config=run.fingerprint(),
        inputs=[InputDigest(name=path.name, sha256=file_sha256(path)) for path in inputs],
        outputs=sorted(outputs),
        counts=dict(sorted((counts or {}).items())),
    )


def write_bytes(path: Path, data: bytes) -> None:
    try:
        path.write_bytes(data)
    except OSError as e:
        raise CorpusIOError(f"cannot write {path}: {e}") from e


def write_manifest(output_dir: Path, manifest: RunManifest) -> Path:
    target = output_dir / MANIFEST_NAME
    text = json.dumps(manifest.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"
    write_bytes(target, text.encode("utf-8"))
    return target


def prepare_output_dir(output_dir: Optional[Path]) -> Path:
    if output_dir is None:
        raise ConfigError("an output directory is required (--output-dir)")
    try:
        output_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise CorpusIOError(f"cannot create {output_dir}: {e}") from e
    return output_dir
