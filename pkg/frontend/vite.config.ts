import { defineConfig } from "vite";

export default defineConfig({
  build: {
    outDir: "../src/happening/ui",
    emptyOutDir: true,
  },
  test: {
    environment: "jsdom",
  },
});
