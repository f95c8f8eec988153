import { describe, expect, it } from "vitest";
import { initials, renderAvatar, sizeClass } from "../src/avatar.js";

describe("initials", () => {
  it("takes the first letters of the name parts", () => {
    expect(initials("Kurt Reinholdt")).toBe("KR");
  });

  it("handles single names and middle names", () => {
    expect(initials("Madonna")).toBe("M");
    expect(initials("Anna Maria Lindqvist")).toBe("AL");
  });
});

describe("size classes", () => {
  // Must mirror the API's weight bijection: 1→small, 2→medium, 3→large.
  it("maps each weight to its css class", () => {
    expect(sizeClass("small")).toBe("avatar-small");
    expect(sizeClass("medium")).toBe("avatar-medium");
    expect(sizeClass("large")).toBe("avatar-large");
  });

  it("renders the class onto the disc", () => {
    const disc = renderAvatar("Kurt Reinholdt", "large");
    expect(disc.classList.contains("avatar-large")).toBe(true);
    expect(disc.textContent).toBe("KR");
  });
});
