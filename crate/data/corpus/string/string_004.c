/* count vowels */
int main()
{
    char word[1000], ch;
    int v = 0, k = 0;
    gets(word);
    for (; word[k]; k++) {
        ch = tolower(word[k]);
        if (ch == 'a' || ch == 'e' || ch == 'i' || ch == 'o' || ch == 'u')
            v++;
    }
    printf("%d\n", v);
    return 0;
}
