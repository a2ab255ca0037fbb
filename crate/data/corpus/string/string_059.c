/* palindrome check */
int main()
{
    char word[500];
    int n, ok = 1;
    int i;
    scanf("%s", word);
    n = strlen(word);
    i = 0;
    while (i < n / 2) {
        if (word[i] != word[n - 1 - i]) {
        ok = 0;
        break;
        }
        i++;
    }
    printf("%s\n", ok ? "YES" : "NO");
    return 0;
}
