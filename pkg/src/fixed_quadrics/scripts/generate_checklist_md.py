import json
from pathlib import Path

from fixed_quadrics.checklists import RULES_DIR


def generate_checklist_md(
    checklist_path: Path = RULES_DIR / "verify.json",
    output_file: Path = Path("docs/VERIFICATION_CHECKS.md"),
) -> Path | None:
    if not checklist_path.exists():
        print(f"Error: {checklist_path} not found")
        return None

    md_content = "# 📋 Verification Checks (Generated)\n\n"
    md_content += (
        f"> **Source of Truth**: `{checklist_path.name}` defines the checks run by "
        "`fixed-quadrics verify` and `fixed-quadrics sweep`.\n\n"
    )
    md_content += "## ⚡ Phases\n\n"

    with open(checklist_path) as f:
        data = json.load(f)

    for phase in data.get("phases", []):
        md_content += f"### {phase['name']} — {phase['status']}\n\n"
        if phase.get("description"):
            md_content += f"{phase['description']}\n\n"

        for check in phase.get("checks", []):
            gate = f", n ≤ `{check['max_n']}`" if "max_n" in check else ""
            md_content += (
                f"- [ ] **{check['description']}** (`{check['id']}`, {check['type']}, "
                f"Validator: `{check['validator']}`{gate})\n"
            )
        md_content += "\n"

    output_file.parent.mkdir(parents=True, exist_ok=True)

    with open(output_file, "w") as f:
        f.write(md_content)

    print(f"Successfully generated {output_file}")
    return output_file


if __name__ == "__main__":
    generate_checklist_md()
