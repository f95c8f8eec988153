// Deterministic initials avatars, sized by the API's weight field.

import type { Weight } from "./api.js";

export function initials(displayName: string): string {
  const parts = displayName.trim().split(/\s+/).filter(Boolean);
  if (parts.length === 0) return "?";
  if (parts.length === 1) return parts[0][0].toUpperCase();
  return (parts[0][0] + parts[parts.length - 1][0]).toUpperCase();
}

export function sizeClass(weight: Weight): string {
  return `avatar-${weight}`;
}

export function renderAvatar(displayName: string, weight: Weight): HTMLElement {
  const disc = document.createElement("span");
  disc.className = `avatar ${sizeClass(weight)}`;
  disc.textContent = initials(displayName);
  disc.title = displayName;
  return disc;
}
